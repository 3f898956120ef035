from fermatcycles.cli import main

raise SystemExit(main())
