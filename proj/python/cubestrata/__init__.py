from _cubestrata import *  # noqa: F401,F403
