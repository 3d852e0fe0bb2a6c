"""
Main Entry Point
Runs the Hodge degeneration engine command line
"""

import sys
import argparse
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import run
from src.utils import default_config, load_config, setup_logger


def main():
    """Main function: configure logging from the configuration, then run the CLI"""

    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--config', type=str, default='config/config.yaml')
    parser.add_argument('--debug', action='store_true')
    parser.add_argument('--no-log-files', action='store_true')
    known, _ = parser.parse_known_args()

    argv = [arg for arg in sys.argv[1:] if arg != '--no-log-files']

    # Setup logging before the configuration is validated
    setup_logger(level='DEBUG' if known.debug else 'WARNING', files=False)
    try:
        config = load_config(known.config) if Path(known.config).exists() else default_config()
    except ValueError:
        # run() reports the invalid configuration as a structured error
        sys.exit(run(argv))

    level = 'DEBUG' if known.debug else config['system'].get('log_level', 'WARNING')
    setup_logger(log_dir=config['paths'].get('logs', 'logs'), level=level,
                 files=not known.no_log_files)
    sys.exit(run(argv))


if __name__ == '__main__':
    main()
