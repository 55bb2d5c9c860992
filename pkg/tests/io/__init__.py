# I/O tests: run files, snapshots, manifests and run directories
