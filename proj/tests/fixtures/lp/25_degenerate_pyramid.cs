# apex shared by many facets
# expect optimal -1/2
HORNLAB-CS v1 n=0 mode=custom vars=3
OBJ 0 3:-1
GE 0 1:1 3:-1
GE 0 2:1 3:-1
GE 1 1:-1 3:-1
GE 1 2:-1 3:-1
GE 0 3:1
GE 2 1:-1 2:-1 3:-2
GE 0 1:1 2:1 3:-2
