//! Reference potentials `x² + m(m+1)/x² + c + k·N(x)/D(x)²`, coefficients of
//! even powers listed upwards.

use dcka::exact_core::{rat, Poly, Rat, RatFunc};

pub struct Reference {
    pub scheme: &'static str,
    pub m: i64,
    pub constant: i64,
    pub factor: i64,
    pub num: &'static [i64],
    pub den: &'static [i64],
}

impl Reference {
    /// `k·N/D²`.
    pub fn remainder(&self) -> RatFunc {
        let d = Poly::from_even_ints(self.den);
        RatFunc::new(Poly::from_even_ints(self.num).scale(&rat(self.factor)), &d * &d)
            .expect("nonzero denominator")
    }

    pub fn constant(&self) -> Rat {
        rat(self.constant)
    }
}

pub const REFERENCES: [Reference; 4] = [
    Reference {
        scheme: "-3,-7",
        m: 2,
        constant: -4,
        factor: 24,
        num: &[-2205, -3654, -840, 528, 240, 32],
        den: &[105, 126, 60, 8],
    },
    Reference {
        scheme: "1,4,5",
        m: 1,
        constant: 6,
        factor: 8,
        num: &[-75, 230, -920, -144, -48, 96],
        den: &[15, 10, -4, 8],
    },
    Reference {
        scheme: "1,5,6",
        m: 1,
        constant: 6,
        factor: 16,
        num: &[-675, -3960, 9180, 432, -5712, 1152, -960, 256],
        den: &[45, 60, 72, -48, 16],
    },
    Reference {
        scheme: "1,4,5,10,11",
        m: 1,
        constant: 10,
        factor: 16,
        num: &[
            -72937816875,
            359826563250,
            -3559365463500,
            1124647108200,
            368202542400,
            1343539612800,
            -1951252934400,
            822933619200,
            -1455591836160,
            1118053063680,
            -1055756298240,
            535377653760,
            -147987087360,
            32552681472,
            -9212461056,
            5052694528,
            -1919090688,
            402784256,
            -49020928,
            2621440,
        ],
        den: &[
            467775, 623700, -374220, 1995840, -702240, 94080, 146560, -64512, 45824, -11264, 1024,
        ],
    },
];
