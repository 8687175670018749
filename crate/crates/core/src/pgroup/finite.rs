use std::ops::Range;

/// A finite group whose elements are the indices `0..order()`, with `0` the
/// identity.
pub trait FiniteGroup: Sync {
    fn order(&self) -> usize;
    fn mul(&self, x: u32, y: u32) -> u32;
    fn inv(&self, x: u32) -> u32;
    fn generators(&self) -> Vec<u32>;

    fn identity(&self) -> u32 {
        0
    }

    fn elements(&self) -> Range<u32> {
        0..self.order() as u32
    }

    fn pow(&self, x: u32, mut k: u64) -> u32 {
        let mut acc = self.identity();
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    fn comm(&self, x: u32, y: u32) -> u32 {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    /// `x^g = g^-1 x g`.
    fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.inv(g), self.mul(x, g))
    }

    fn element_order(&self, x: u32) -> u64 {
        let id = self.identity();
        let mut y = x;
        let mut k = 1;
        while y != id {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}

/// A group given by its full multiplication table.
#[derive(Debug, Clone)]
pub struct TableGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    gens: Vec<u32>,
}

impl TableGroup {
    /// `table[x * order + y] = x y`; element `0` must be the identity.
    pub fn new(order: usize, table: Vec<u32>, gens: Vec<u32>) -> Self {
        assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            inverses[x] = row.iter().position(|&v| v == 0).expect("group table") as u32;
        }
        let gens = gens.into_iter().filter(|&g| g != 0).collect();
        Self {
            order,
            table,
            inverses,
            gens,
        }
    }
}

impl FiniteGroup for TableGroup {
    fn order(&self) -> usize {
        self.order
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.order + y as usize]
    }

    fn inv(&self, x: u32) -> u32 {
        self.inverses[x as usize]
    }

    fn generators(&self) -> Vec<u32> {
        self.gens.clone()
    }
}
