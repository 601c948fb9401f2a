from hypothesis import settings

# Property tests must behave identically on every run; derandomizing also
# keeps hypothesis from writing an example database into the repo.
settings.register_profile("deterministic", derandomize=True, database=None)
settings.load_profile("deterministic")
