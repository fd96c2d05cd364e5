"""q-shifted factorials and basic q-series."""
