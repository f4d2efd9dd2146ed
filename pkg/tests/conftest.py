import os

from hypothesis import settings

settings.register_profile("repo", max_examples=40, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))
