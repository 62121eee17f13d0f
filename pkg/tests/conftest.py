from hypothesis import HealthCheck, settings

# Property sweeps here do real number theory per example; the default
# 200 ms deadline is too twitchy for slow CI boxes.
settings.register_profile(
    "primroots",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("primroots")
