# objective is a constant
# expect optimal 5
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 5
GE 0 1:1
GE 0 2:1
GE 1 1:-1
GE 1 2:-1
