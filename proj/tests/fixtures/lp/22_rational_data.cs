# fractional coefficients
# expect optimal
HORNLAB-CS v1 n=0 mode=custom vars=2
OBJ 1/3 1:1/3 2:-2/7
GE 0 1:1
GE 0 2:1
GE 5/2 1:-1/2 2:-3/4
GE 1/3 1:1/5 2:-1
