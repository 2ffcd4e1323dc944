# superinv/workers/images.py
import logging
from concurrent.futures import ProcessPoolExecutor

from ..errors import StoppedError

log = logging.getLogger(__name__)


def _images_chunk(derivations, monomials):
    return [[d.apply_monomial(mono) for d in derivations] for mono in monomials]


class ImageWorker:
    """Derivation images of monomials, optionally spread over worker processes.

    Results come back in submission order, so they do not depend on the
    number of workers.
    """

    def __init__(self, settings: dict):
        self.settings = settings
        self._stop = False

    def stop(self):
        self._stop = True

    def _chunks(self, monomials: list) -> list:
        size = max(1, int(self.settings.get("chunk_size", 256)))
        return [monomials[i:i + size] for i in range(0, len(monomials), size)]

    def run(self, derivations, monomials) -> list:
        """Return images[monomial][derivation] as Polynomials."""
        monomials = list(monomials)
        chunks = self._chunks(monomials)
        workers = int(self.settings.get("workers", 1))
        results = []
        if workers <= 1 or len(chunks) <= 1:
            for chunk in chunks:
                if self._stop:
                    raise StoppedError("image computation stopped")
                results.extend(_images_chunk(derivations, chunk))
            return results
        log.debug("imaging %d monomials in %d chunks on %d workers", len(monomials), len(chunks), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_images_chunk, derivations, chunk) for chunk in chunks]
            for future in futures:
                if self._stop:
                    for pending in futures:
                        pending.cancel()
                    raise StoppedError("image computation stopped")
                results.extend(future.result())
        return results
