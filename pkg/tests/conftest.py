from hypothesis import settings

# word iterates grow quickly; wall-clock deadlines only add flakiness
settings.register_profile("iterid", deadline=None)
settings.load_profile("iterid")
