from limloc.cli import main

main()
