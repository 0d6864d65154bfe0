# Klee-Minty cube, d = 3
# expect optimal -125
HORNLAB-CS v1 n=0 mode=custom vars=3
OBJ 0 1:-4 2:-2 3:-1
GE 0 1:1
GE 0 2:1
GE 0 3:1
GE 5 1:-1
GE 25 1:-4 2:-1
GE 125 1:-8 2:-4 3:-1
