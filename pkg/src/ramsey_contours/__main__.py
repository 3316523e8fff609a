import sys

from ramsey_contours.cli import main

sys.exit(main())
