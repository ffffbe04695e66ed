"""``python -m hurwitz_lab``"""
from .app.main import main

main()
