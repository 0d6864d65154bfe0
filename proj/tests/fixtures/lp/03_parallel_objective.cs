# objective parallel to a facet
# expect optimal 1
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 0 1:1 2:1
GE -1 1:1 2:1
GE 0 1:1
GE 0 2:1
