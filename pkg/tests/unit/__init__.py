# Unit tests: module-level tests (no sample files required)
