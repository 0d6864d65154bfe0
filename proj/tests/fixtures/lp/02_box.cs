# box corner
# expect optimal -7
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 0 1:-1 2:-2
GE 0 1:1
GE 0 2:1
GE 3 1:-1
GE 2 2:-1
