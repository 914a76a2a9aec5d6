"""Constants package for bladeprof.

This package organizes all toolkit constants by category:
- profile: Blade profile kinds and frame conventions
- law: Speed law kinds and first-integral tolerances
- solver: Integrator/inverse methods, defaults and statuses
- config: Run specification keys and problems
- output: CSV headers and SVG defaults
- command: CLI commands, aliases and exit codes
- logging: Logging option names
"""
