import sys

from linlay.cli import main

sys.exit(main())
