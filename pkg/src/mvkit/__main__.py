from mvkit.cli import main

main()
