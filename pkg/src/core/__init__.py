# Core: constants, logging and settings
