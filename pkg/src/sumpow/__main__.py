import sys

from sumpow.cli import main

sys.exit(main())
