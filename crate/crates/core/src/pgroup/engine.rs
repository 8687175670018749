//! Collection to the normal form `a1^e1 a2^e2 a3^e3 c12^f1 c13^f2`.

use serde::{Deserialize, Serialize};

use super::finite::FiniteGroup;
use super::params::{Family, GroupParams, Mutation};
use crate::error::{Error, Result};

/// Exponent vector of the normal form. Serialized as `[e1, e2, e3, f1, f2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 5]", into = "[u32; 5]")]
pub struct GroupElement {
    pub e1: u32,
    pub e2: u32,
    pub e3: u32,
    pub f1: u32,
    pub f2: u32,
}

impl From<[u32; 5]> for GroupElement {
    fn from(v: [u32; 5]) -> Self {
        Self {
            e1: v[0],
            e2: v[1],
            e3: v[2],
            f1: v[3],
            f2: v[4],
        }
    }
}

impl From<GroupElement> for [u32; 5] {
    fn from(x: GroupElement) -> Self {
        [x.e1, x.e2, x.e3, x.f1, x.f2]
    }
}

/// `c12^f1 c13^f2` as a pair.
type Tail = (u32, u32);

/// Rewrite data: power relations as tails in `<c12, c13>` and the action of
/// `a3` on `c13`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Presentation {
    /// `2^n`.
    a3_order: u32,
    /// `2^m`.
    c13_order: u32,
    a1_sq: Tail,
    a2_sq: Tail,
    a3_pow: Tail,
    a3_inverts_c13: bool,
    /// `a3 a1 = a1 a3 c13^s`.
    a3a1: u32,
}

impl Presentation {
    fn new(p: &GroupParams, mutation: Mutation) -> Self {
        let big_n = 1u32 << p.n;
        let big_m = 1u32 << p.m;
        let half = big_m / 2;
        let neg_one = big_m - 1;
        let mut pres = match p.family {
            Family::Gamma => Self {
                a3_order: big_n,
                c13_order: big_m,
                a1_sq: (0, neg_one),
                a2_sq: (0, half * p.eps as u32),
                a3_pow: (1, half),
                a3_inverts_c13: true,
                a3a1: neg_one,
            },
            Family::Gamma4r => Self {
                a3_order: big_n,
                c13_order: 2,
                a1_sq: (1, 0),
                a2_sq: (1, 0),
                a3_pow: (0, 1),
                a3_inverts_c13: false,
                a3a1: 1,
            },
        };
        match mutation {
            Mutation::None => {}
            Mutation::A3CentralizesC13 => pres.a3_inverts_c13 = false,
            Mutation::FlipA3A1 => pres.a3a1 = (big_m - pres.a3a1) % big_m,
        }
        pres
    }

    fn neg(&self, k: u32) -> u32 {
        (self.c13_order - k % self.c13_order) % self.c13_order
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.c13_order
    }

    /// `c13^k` moved rightwards past `a3^e3`.
    fn past_a3(&self, k: u32, e3: u32) -> u32 {
        if self.a3_inverts_c13 && e3 % 2 == 1 {
            self.neg(k)
        } else {
            k
        }
    }

    fn times_a1(&self, z: &mut GroupElement) {
        // a2^e2 a1 = a1 a2^e2 c12^e2 and a3^e3 a1 = a1 a3^e3 c13^(s e3) up to
        // the action of a3 on c13.
        z.f1 ^= z.e2;
        let k = if self.a3_inverts_c13 { z.e3 % 2 } else { z.e3 % self.c13_order };
        z.f2 = self.add(z.f2, (self.a3a1 as u64 * k as u64 % self.c13_order as u64) as u32);
        if z.e1 == 0 {
            z.e1 = 1;
        } else {
            z.e1 = 0;
            z.f1 ^= self.a1_sq.0;
            z.f2 = self.add(z.f2, self.past_a3(self.a1_sq.1, z.e3));
        }
    }

    fn times_a2(&self, z: &mut GroupElement) {
        if z.e2 == 0 {
            z.e2 = 1;
        } else {
            z.e2 = 0;
            z.f1 ^= self.a2_sq.0;
            z.f2 = self.add(z.f2, self.past_a3(self.a2_sq.1, z.e3));
        }
    }

    fn times_a3_pow(&self, z: &mut GroupElement, k: u32) {
        if k == 0 {
            return;
        }
        if self.a3_inverts_c13 && k % 2 == 1 {
            z.f2 = self.neg(z.f2);
        }
        let e = z.e3 + k;
        if e >= self.a3_order {
            // the wrap happens at step a3_order - e3; later steps act on the tail
            let later = e - self.a3_order;
            z.f1 ^= self.a3_pow.0;
            let t = if self.a3_inverts_c13 && later % 2 == 1 {
                self.neg(self.a3_pow.1)
            } else {
                self.a3_pow.1
            };
            z.f2 = self.add(z.f2, t);
            z.e3 = later;
        } else {
            z.e3 = e;
        }
    }

    fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        let mut z = x;
        if y.e1 == 1 {
            self.times_a1(&mut z);
        }
        if y.e2 == 1 {
            self.times_a2(&mut z);
        }
        self.times_a3_pow(&mut z, y.e3);
        z.f1 ^= y.f1;
        z.f2 = self.add(z.f2, y.f2);
        z
    }
}

/// `Γ_{n,m,ε}` or `Γ_n^{(4(r))}` with its collection engine.
#[derive(Debug, Clone)]
pub struct PGroup {
    params: GroupParams,
    mutation: Mutation,
    pres: Presentation,
    n_bits: u32,
    m_bits: u32,
}

pub fn make_group(params: GroupParams) -> Result<PGroup> {
    PGroup::new(params)
}

impl PGroup {
    pub fn new(params: GroupParams) -> Result<Self> {
        Self::with_mutation(params, Mutation::None)
    }

    pub fn with_mutation(params: GroupParams, mutation: Mutation) -> Result<Self> {
        let params = params.validated()?;
        let m_bits = match params.family {
            Family::Gamma => params.m,
            Family::Gamma4r => 1,
        };
        Ok(Self {
            params,
            mutation,
            pres: Presentation::new(&params, mutation),
            n_bits: params.n,
            m_bits,
        })
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    /// Whether `x` is a valid exponent vector for this group.
    pub fn contains(&self, x: &GroupElement) -> bool {
        x.e1 < 2
            && x.e2 < 2
            && x.e3 < self.pres.a3_order
            && x.f1 < 2
            && x.f2 < self.pres.c13_order
    }

    pub fn encode(&self, x: &GroupElement) -> u32 {
        x.e1 | x.e2 << 1 | x.e3 << 2 | x.f1 << (self.n_bits + 2) | x.f2 << (self.n_bits + 3)
    }

    pub fn decode(&self, i: u32) -> GroupElement {
        GroupElement {
            e1: i & 1,
            e2: (i >> 1) & 1,
            e3: (i >> 2) & ((1 << self.n_bits) - 1),
            f1: (i >> (self.n_bits + 2)) & 1,
            f2: (i >> (self.n_bits + 3)) & ((1 << self.m_bits) - 1),
        }
    }

    fn check(&self, x: &GroupElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn mul_elem(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.pres.mul(*x, *y))
    }

    pub fn inv_elem(&self, x: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        Ok(self.decode(self.inv(self.encode(x))))
    }

    pub fn pow_elem(&self, x: &GroupElement, k: u64) -> Result<GroupElement> {
        self.check(x)?;
        Ok(self.decode(self.pow(self.encode(x), k)))
    }

    pub fn comm_elem(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.decode(self.comm(self.encode(x), self.encode(y))))
    }

    fn unit(e1: u32, e2: u32, e3: u32, f1: u32, f2: u32) -> GroupElement {
        GroupElement { e1, e2, e3, f1, f2 }
    }

    pub fn a1(&self) -> u32 {
        self.encode(&Self::unit(1, 0, 0, 0, 0))
    }

    pub fn a2(&self) -> u32 {
        self.encode(&Self::unit(0, 1, 0, 0, 0))
    }

    pub fn a3(&self) -> u32 {
        self.encode(&Self::unit(0, 0, 1, 0, 0))
    }

    /// The normal-form letter `c12` (not computed as a commutator).
    pub fn c12(&self) -> u32 {
        self.encode(&Self::unit(0, 0, 0, 1, 0))
    }

    /// The normal-form letter `c13`; for `Γ_n^{(4(r))}` this is `a3^{2^n}`.
    pub fn c13(&self) -> u32 {
        self.encode(&Self::unit(0, 0, 0, 0, 1))
    }

    /// `c13^k`.
    pub fn c13_pow(&self, k: i64) -> u32 {
        let m = self.pres.c13_order as i64;
        self.encode(&Self::unit(0, 0, 0, 0, k.rem_euclid(m) as u32))
    }

    /// Product of a word given as `(generator, exponent)` pairs.
    pub fn word(&self, letters: &[(u32, i64)]) -> u32 {
        letters.iter().fold(self.identity(), |acc, &(g, k)| {
            let base = if k < 0 { self.inv(g) } else { g };
            self.mul(acc, self.pow(base, k.unsigned_abs()))
        })
    }
}

impl FiniteGroup for PGroup {
    fn order(&self) -> usize {
        1 << (self.n_bits + self.m_bits + 3)
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        self.encode(&self.pres.mul(self.decode(x), self.decode(y)))
    }

    fn inv(&self, x: u32) -> u32 {
        // the exponent divides 2^(n + m + 1)
        self.pow(x, (1u64 << (self.n_bits + self.m_bits + 1)) - 1)
    }

    fn generators(&self) -> Vec<u32> {
        vec![self.a1(), self.a2(), self.a3()]
    }
}
