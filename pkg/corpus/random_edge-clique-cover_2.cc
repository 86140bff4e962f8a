CONSCHECK 1
PROBLEM edge-clique-cover
N 2
K 2
T 3
S 0 0
S 0 1
0 1
S 1 1
0 1
