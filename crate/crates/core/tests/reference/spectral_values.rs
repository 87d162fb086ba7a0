#![allow(clippy::excessive_precision, clippy::approx_constant)]

pub const OMEGA_ONE_MINUS_SQRT2: [f64; 7] = [
    0.6388757496724610173,
    1.6508150441581095091,
    2.6522491072629017793,
    3.6526870036961979693,
    4.6528758368218069227,
    5.6529740136974676322,
    6.6530314654694869749,
];
pub const OMEGA_MINUS_ONE_MINUS_SQRT2: [f64; 7] = [
    0.54076518136492919999,
    1.5607989123457050949,
    2.5627984945624965361,
    3.5633822615153321366,
    4.5636285844731011991,
    5.5637550009445918913,
    6.5638283413027803597,
];
pub const OMEGA_ZERO: [f64; 7] = [
    0.65632553529394946612,
    1.6670259659327377327,
    2.6683507595212838941,
    3.6687584762285328018,
    4.6689349701659158133,
    5.6690269427026690635,
    6.6690808464695768058,
];
pub const OMEGA_MINUS_ONE: [f64; 7] = [
    0.61242373258322356051,
    1.6263651748171693876,
    2.627962247983503796,
    3.6284441185047025625,
    4.6286507074199978791,
    5.6287577421193255204,
    6.6288202317732424397,
];
pub const OMEGA_MINUS_SQRT2: [f64; 7] = [
    0.59250474772812049879,
    1.6080472842596854809,
    2.6097633267269413638,
    3.6102764150147159319,
    4.6104954215518108695,
    5.6106085920291973447,
    6.6106745481637524154,
];
/// (E, x, y, G) with hbar = m = kappa = 1.
pub const GREENS: [[f64; 4]; 5] = [
    [-0.3, 1.0, 2.0, -2.3501178473101126087],
    [-0.3, 0.5, 0.5, -0.5979637399345700906],
    [-0.7, 0.2, 3.0, 0.30294393711908130132],
    [-0.7, -1.5, -0.4, 1.6731976521373820835],
    [-0.05, 4.0, 7.0, -3.7708368546404453514],
];
pub const OMEGA_AT_MINUS_0_3: f64 = -8.4423929992833747326;
