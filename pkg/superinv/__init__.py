__all__ = [
    "action",
    "algebras",
    "app",
    "combinatorics",
    "conventions",
    "invariants",
    "linalg",
    "samples",
    "solver",
    "superpoly",
    "supermatrix",
]
