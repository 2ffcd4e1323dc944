from hypothesis import settings

settings.register_profile("superinv", max_examples=40, deadline=None, derandomize=True)
settings.load_profile("superinv")

collect_ignore = ["examples"]
