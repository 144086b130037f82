import sys

from qasc.cli import main

sys.exit(main())
