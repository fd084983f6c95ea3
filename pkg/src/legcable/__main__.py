import sys

from legcable.cli import main

sys.exit(main())
