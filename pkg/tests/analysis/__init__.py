# Analysis tests: conservation checks, scheme comparison and benchmarks
