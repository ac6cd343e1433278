// Closed forms on [-1,1]^n, one (index, expression) pair per basis function,
// in basis order.

pub(crate) const XI2: [(&str, &str); 12] = [
    ("11", "((1-x) (1-y) (-2-2 x+x^2-2 y+y^2))/16"),
    ("14", "((1-x) (y+1) (-2-2 x+x^2+2 y+y^2))/16"),
    ("41", "((x+1) (1-y) (-2+2 x+x^2-2 y+y^2))/16"),
    ("44", "((x+1) (y+1) (-2+2 x+x^2+2 y+y^2))/16"),
    ("12", "((1-x) (1-y)^2 (y+1))/16"),
    ("13", "((1-x) (1-y) (y+1)^2)/16"),
    ("42", "((x+1) (1-y)^2 (y+1))/16"),
    ("43", "((x+1) (1-y) (y+1)^2)/16"),
    ("21", "((1-x)^2 (x+1) (1-y))/16"),
    ("31", "((1-x) (x+1)^2 (1-y))/16"),
    ("24", "((1-x)^2 (x+1) (y+1))/16"),
    ("34", "((1-x) (x+1)^2 (y+1))/16"),
];

pub(crate) const THETA2: [(&str, &str); 12] = [
    ("11", "(-(1-x) (1-y) (-2+x+x^2+y+y^2))/8"),
    ("14", "(-(1-x) (y+1) (-2+x+x^2-y+y^2))/8"),
    ("41", "(-(x+1) (1-y) (-2-x+x^2+y+y^2))/8"),
    ("44", "(-(x+1) (y+1) (-2-x+x^2-y+y^2))/8"),
    ("12", "((1-x) (1-y)^2 (y+1))/8"),
    ("13", "((1-x) (1-y) (y+1)^2)/8"),
    ("42", "((x+1) (1-y)^2 (y+1))/8"),
    ("43", "((x+1) (1-y) (y+1)^2)/8"),
    ("21", "((1-x)^2 (x+1) (1-y))/8"),
    ("31", "((1-x) (x+1)^2 (1-y))/8"),
    ("24", "((1-x)^2 (x+1) (y+1))/8"),
    ("34", "((1-x) (x+1)^2 (y+1))/8"),
];

pub(crate) const XI3: [(&str, &str); 32] = [
    ("111", "((1-x) (1-y) (1-z) (-5-2 x+x^2-2 y+y^2-2 z+z^2))/32"),
    ("114", "((1-x) (1-y) (z+1) (-5-2 x+x^2-2 y+y^2+2 z+z^2))/32"),
    ("141", "((1-x) (y+1) (1-z) (-5-2 x+x^2+2 y+y^2-2 z+z^2))/32"),
    ("144", "((1-x) (y+1) (z+1) (-5-2 x+x^2+2 y+y^2+2 z+z^2))/32"),
    ("411", "((x+1) (1-y) (1-z) (-5+2 x+x^2-2 y+y^2-2 z+z^2))/32"),
    ("414", "((x+1) (1-y) (z+1) (-5+2 x+x^2-2 y+y^2+2 z+z^2))/32"),
    ("441", "((x+1) (y+1) (1-z) (-5+2 x+x^2+2 y+y^2-2 z+z^2))/32"),
    ("444", "((x+1) (y+1) (z+1) (-5+2 x+x^2+2 y+y^2+2 z+z^2))/32"),
    ("112", "((1-x) (1-y) (1-z)^2 (z+1))/32"),
    ("113", "((1-x) (1-y) (1-z) (z+1)^2)/32"),
    ("121", "((1-x) (1-y)^2 (y+1) (1-z))/32"),
    ("124", "((1-x) (1-y)^2 (y+1) (z+1))/32"),
    ("131", "((1-x) (1-y) (y+1)^2 (1-z))/32"),
    ("134", "((1-x) (1-y) (y+1)^2 (z+1))/32"),
    ("142", "((1-x) (y+1) (1-z)^2 (z+1))/32"),
    ("143", "((1-x) (y+1) (1-z) (z+1)^2)/32"),
    ("211", "((1-x)^2 (x+1) (1-y) (1-z))/32"),
    ("214", "((1-x)^2 (x+1) (1-y) (z+1))/32"),
    ("241", "((1-x)^2 (x+1) (y+1) (1-z))/32"),
    ("244", "((1-x)^2 (x+1) (y+1) (z+1))/32"),
    ("311", "((1-x) (x+1)^2 (1-y) (1-z))/32"),
    ("314", "((1-x) (x+1)^2 (1-y) (z+1))/32"),
    ("341", "((1-x) (x+1)^2 (y+1) (1-z))/32"),
    ("344", "((1-x) (x+1)^2 (y+1) (z+1))/32"),
    ("412", "((x+1) (1-y) (1-z)^2 (z+1))/32"),
    ("413", "((x+1) (1-y) (1-z) (z+1)^2)/32"),
    ("421", "((x+1) (1-y)^2 (y+1) (1-z))/32"),
    ("424", "((x+1) (1-y)^2 (y+1) (z+1))/32"),
    ("431", "((x+1) (1-y) (y+1)^2 (1-z))/32"),
    ("434", "((x+1) (1-y) (y+1)^2 (z+1))/32"),
    ("442", "((x+1) (y+1) (1-z)^2 (z+1))/32"),
    ("443", "((x+1) (y+1) (1-z) (z+1)^2)/32"),
];

pub(crate) const THETA3: [(&str, &str); 32] = [
    ("111", "(-(1-x) (1-y) (1-z) (-2+x+x^2+y+y^2+z+z^2))/16"),
    ("114", "(-(1-x) (1-y) (z+1) (-2+x+x^2+y+y^2-z+z^2))/16"),
    ("141", "(-(1-x) (y+1) (1-z) (-2+x+x^2-y+y^2+z+z^2))/16"),
    ("144", "(-(1-x) (y+1) (z+1) (-2+x+x^2-y+y^2-z+z^2))/16"),
    ("411", "(-(x+1) (1-y) (1-z) (-2-x+x^2+y+y^2+z+z^2))/16"),
    ("414", "(-(x+1) (1-y) (z+1) (-2-x+x^2+y+y^2-z+z^2))/16"),
    ("441", "(-(x+1) (y+1) (1-z) (-2-x+x^2-y+y^2+z+z^2))/16"),
    ("444", "(-(x+1) (y+1) (z+1) (-2-x+x^2-y+y^2-z+z^2))/16"),
    ("112", "((1-x) (1-y) (1-z)^2 (z+1))/16"),
    ("113", "((1-x) (1-y) (1-z) (z+1)^2)/16"),
    ("121", "((1-x) (1-y)^2 (y+1) (1-z))/16"),
    ("124", "((1-x) (1-y)^2 (y+1) (z+1))/16"),
    ("131", "((1-x) (1-y) (y+1)^2 (1-z))/16"),
    ("134", "((1-x) (1-y) (y+1)^2 (z+1))/16"),
    ("142", "((1-x) (y+1) (1-z)^2 (z+1))/16"),
    ("143", "((1-x) (y+1) (1-z) (z+1)^2)/16"),
    ("211", "((1-x)^2 (x+1) (1-y) (1-z))/16"),
    ("214", "((1-x)^2 (x+1) (1-y) (z+1))/16"),
    ("241", "((1-x)^2 (x+1) (y+1) (1-z))/16"),
    ("244", "((1-x)^2 (x+1) (y+1) (z+1))/16"),
    ("311", "((1-x) (x+1)^2 (1-y) (1-z))/16"),
    ("314", "((1-x) (x+1)^2 (1-y) (z+1))/16"),
    ("341", "((1-x) (x+1)^2 (y+1) (1-z))/16"),
    ("344", "((1-x) (x+1)^2 (y+1) (z+1))/16"),
    ("412", "((x+1) (1-y) (1-z)^2 (z+1))/16"),
    ("413", "((x+1) (1-y) (1-z) (z+1)^2)/16"),
    ("421", "((x+1) (1-y)^2 (y+1) (1-z))/16"),
    ("424", "((x+1) (1-y)^2 (y+1) (z+1))/16"),
    ("431", "((x+1) (1-y) (y+1)^2 (1-z))/16"),
    ("434", "((x+1) (1-y) (y+1)^2 (z+1))/16"),
    ("442", "((x+1) (y+1) (1-z)^2 (z+1))/16"),
    ("443", "((x+1) (y+1) (1-z) (z+1)^2)/16"),
];
