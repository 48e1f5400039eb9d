/// B_{2j} / (2j)! for j = 1..=40.
pub(crate) const B2J_OVER_FACTORIAL: [f64; 40] = [
    0.083333333333333333,
    -0.0013888888888888889,
    3.3068783068783069e-5,
    -8.2671957671957672e-7,
    2.0876756987868099e-8,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
    2.2679524523376831e-24,
    -5.7447906688722024e-26,
    1.4551724756148649e-27,
    -3.6859949406653102e-29,
    9.3367342570950447e-31,
    -2.3650224157006299e-32,
    5.9906717624821343e-34,
    -1.5174548844682903e-35,
    3.8437581254541882e-37,
    -9.736353072646691e-39,
    2.466247044200681e-40,
    -6.2470767418207437e-42,
    1.5824030244644914e-43,
    -4.008273685948936e-45,
    1.0153075855569556e-46,
    -2.5718041582418717e-48,
    6.5144560352338149e-50,
    -1.6501309906896525e-51,
    4.1798306285394759e-53,
    -1.0587634667702909e-54,
    2.6818791912607707e-56,
    -6.7932793511074212e-58,
    1.7207577616681405e-59,
    -4.3587303293488938e-61,
    1.1040792903684667e-62,
    -2.7966655133781345e-64,
];
