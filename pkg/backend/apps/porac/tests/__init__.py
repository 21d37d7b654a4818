from hypothesis import settings

# Repeatable property runs; numerical searches have no meaningful deadline.
settings.register_profile("porac", derandomize=True, deadline=None, max_examples=40)
settings.load_profile("porac")
