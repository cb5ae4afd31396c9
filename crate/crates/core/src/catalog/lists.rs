//! Edge lists (1-indexed) of the minor-minimal graphs found by computer search.

/// Minor-minimal not edge apex graphs, numbered from 1 in this order.
pub(crate) const NE_LIST: [&str; 15] = [
    "{(1,8),(1,9),(2,4),(2,7),(2,8),(3,6),(3,7),(3,8),(4,5),(4,6),(4,8),(5,6),(5,7),(5,9),(6,7),(6,9),(7,9),(8,9)}",
    "{(1,6),(1,7),(2,5),(2,7),(3,7),(3,8),(3,9),(4,5),(4,6),(4,8),(4,9),(5,7),(5,8),(5,9),(6,7),(6,8),(6,9),(8,9)}",
    "{(1,8),(1,9),(2,6),(2,7),(2,9),(3,5),(3,7),(3,9),(4,5),(4,6),(4,9),(5,6),(5,7),(5,8),(6,7),(6,8),(7,8),(8,9)}",
    "{(1,8),(1,9),(2,7),(2,10),(3,6),(3,8),(3,10),(4,6),(4,7),(4,9),(5,6),(5,7),(5,8),(6,9),(6,10),(7,8),(7,10),(8,9),(9,10)}",
    "{(1,9),(1,10),(2,7),(2,8),(2,10),(3,7),(3,8),(3,9),(4,6),(4,8),(4,10),(5,6),(5,7),(5,9),(6,7),(6,8),(7,10),(8,9),(9,10)}",
    "{(1,6),(1,9),(2,7),(2,8),(3,6),(3,7),(3,10),(4,5),(4,6),(4,7),(4,10),(5,8),(5,9),(5,10),(6,9),(7,8),(8,9),(8,10),(9,10)}",
    "{(1,8),(1,10),(2,4),(2,8),(2,9),(3,4),(3,5),(3,9),(4,5),(4,6),(5,7),(5,10),(6,7),(6,8),(6,9),(7,9),(7,10),(8,10),(9,10)}",
    "{(1,6),(1,7),(1,9),(2,7),(2,8),(2,9),(3,6),(3,8),(3,9),(4,5),(4,8),(4,9),(5,6),(5,7),(5,9),(6,8),(7,8)}",
    "{(1,7),(1,8),(1,9),(2,6),(2,8),(2,9),(3,6),(3,7),(3,9),(4,6),(4,7),(4,8),(5,6),(5,7),(5,8),(5,9)}",
    "{(1,6),(1,7),(1,8),(2,5),(2,7),(2,8),(3,4),(3,7),(3,8),(4,5),(4,6),(4,7),(4,8),(5,6),(5,7),(5,8),(6,7),(6,8)}",
    "{(1,6),(1,7),(1,9),(2,5),(2,7),(2,8),(3,7),(3,8),(3,9),(4,5),(4,6),(4,8),(4,9),(5,7),(5,9),(6,7),(6,8),(8,9)}",
    "{(1,4),(1,7),(1,8),(2,3),(2,7),(2,8),(3,5),(3,6),(4,5),(4,6),(5,7),(5,8),(6,7),(6,8)}",
    "{(1,5),(1,6),(1,7),(2,5),(2,6),(2,7),(3,5),(3,6),(3,7),(4,5),(4,6),(4,7)}",
    "{(1,6),(1,7),(1,8),(1,9),(2,4),(2,5),(2,8),(2,9),(3,4),(3,5),(3,6),(3,7),(4,7),(4,9),(5,6),(5,8),(6,9),(7,8)}",
    "{(1,3),(1,4),(1,5),(1,6),(2,3),(2,4),(2,5),(2,6),(3,4),(3,5),(3,6),(4,5),(4,6),(5,6)}",
];

/// Minor-minimal not contraction apex graphs, numbered from 1 in this order.
pub(crate) const NC_LIST: [&str; 22] = [
    "{(1,9),(1,12),(2,8),(2,11),(3,6),(3,7),(4,5),(4,10),(5,11),(5,12),(6,9),(6,11),(7,8),(7,12),(8,10),(9,10)}",
    "{(1,6),(1,10),(2,5),(2,9),(3,4),(3,6),(3,8),(4,5),(4,7),(5,10),(6,9),(7,9),(7,11),(8,10),(8,11),(9,11),(10,11)}",
    "{(1,6),(1,10),(2,7),(2,8),(2,9),(3,6),(3,8),(3,9),(4,7),(4,9),(4,10),(5,7),(5,8),(5,10),(6,7),(8,10),(9,10)}",
    "{(1,9),(1,10),(2,3),(2,6),(2,7),(3,4),(3,5),(4,7),(4,10),(5,6),(5,9),(6,8),(6,10),(7,8),(7,9),(8,9),(8,10)}",
    "{(1,9),(1,11),(2,9),(2,10),(3,4),(3,6),(3,11),(4,5),(4,10),(5,8),(5,9),(6,7),(6,9),(7,10),(7,11),(8,10),(8,11)}",
    "{(1,9),(1,11),(2,9),(2,10),(3,5),(3,6),(3,7),(4,5),(4,6),(4,9),(5,11),(6,10),(7,8),(7,9),(8,10),(8,11),(10,11)}",
    "{(1,4),(1,11),(2,6),(2,9),(3,5),(3,6),(3,7),(4,5),(4,9),(5,10),(6,11),(7,9),(7,10),(8,9),(8,10),(8,11),(10,11)}",
    "{(1,9),(1,11),(2,4),(2,5),(2,6),(3,5),(3,6),(3,7),(4,8),(4,9),(5,11),(6,10),(7,9),(7,10),(8,10),(8,11),(10,11)}",
    "{(1,10),(1,11),(2,3),(2,7),(2,9),(3,6),(3,8),(4,5),(4,9),(4,10),(5,8),(5,11),(6,7),(6,11),(7,10),(8,10),(9,11)}",
    "{(1,8),(1,9),(2,6),(2,12),(3,5),(3,11),(4,11),(4,12),(5,7),(5,9),(6,7),(6,8),(7,10),(8,11),(9,12),(10,11),(10,12)}",
    "{(1,9),(1,11),(2,5),(2,12),(3,4),(3,12),(4,8),(4,9),(5,7),(5,9),(6,7),(6,8),(6,11),(7,10),(8,10),(10,12),(11,12)}",
    "{(1,4),(1,8),(1,9),(2,3),(2,8),(2,9),(3,4),(3,6),(3,9),(4,5),(4,8),(5,6),(5,7),(5,9),(6,7),(6,8),(7,8),(7,9)}",
    "{(1,4),(1,8),(1,9),(2,4),(2,7),(2,9),(3,4),(3,6),(3,9),(5,6),(5,7),(5,8),(5,9),(6,7),(6,8),(7,8)}",
    "{(1,5),(1,6),(1,8),(2,3),(2,4),(2,7),(3,6),(3,10),(4,5),(4,10),(5,9),(6,9),(7,9),(7,10),(8,9),(8,10)}",
    "{(1,5),(1,6),(1,8),(2,3),(2,4),(2,7),(3,6),(3,10),(4,5),(4,9),(5,10),(6,9),(7,9),(7,10),(8,9),(8,10)}",
    "{(1,2),(1,9),(1,10),(2,7),(2,8),(3,8),(3,9),(3,10),(4,7),(4,9),(4,10),(5,7),(5,8),(5,10),(6,7),(6,8),(6,9)}",
    "{(1,2),(1,4),(1,10),(2,3),(2,9),(3,4),(3,7),(4,8),(5,7),(5,8),(5,10),(6,7),(6,8),(6,9),(7,10),(8,9),(9,10)}",
    "{(1,5),(1,6),(1,7),(2,5),(2,6),(2,7),(3,5),(3,6),(3,7),(4,5),(4,6),(4,7)}",
    "{(1,2),(1,4),(1,7),(1,9),(2,3),(2,6),(2,8),(3,5),(3,6),(3,9),(4,5),(4,7),(4,8),(5,8),(5,9),(6,8),(6,9),(7,8),(7,9)}",
    "{(1,6),(1,7),(1,8),(1,9),(2,4),(2,5),(2,8),(2,9),(3,4),(3,5),(3,6),(3,7),(4,7),(4,9),(5,6),(5,8),(6,9),(7,8)}",
    "{(1,5),(1,6),(1,7),(1,8),(2,3),(2,4),(2,7),(2,8),(3,4),(3,6),(3,8),(4,5),(4,8),(5,6),(5,7),(6,7)}",
    "{(1,2),(1,3),(1,4),(1,5),(1,6),(2,3),(2,4),(2,5),(2,6),(3,4),(3,5),(3,6),(4,5),(4,6),(5,6)}",
];
