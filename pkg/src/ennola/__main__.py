from ennola.cli import main

raise SystemExit(main())
