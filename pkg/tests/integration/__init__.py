# Integration tests: CLI subcommands end to end
