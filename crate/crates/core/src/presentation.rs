//! Mixed-radix encoding of a graded abelian group `⊕_g ⊕_f Z/d_{g,f}`.
//!
//! Coordinates are laid out component by component in group-element order,
//! the last coordinate least significant, so index order is the
//! lexicographic order of residue tuples.

use crate::desc::Tagged;
use crate::error::{AlgebraError, Result};

#[derive(Debug, Clone)]
pub(crate) struct Presentation {
    orders: Vec<u32>,
    offsets: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl Presentation {
    pub fn new(components: &[Vec<u32>], cap: usize, what: &'static str) -> Result<Self> {
        let mut orders = Vec::new();
        let mut offsets = vec![0];
        for (g, comp) in components.iter().enumerate() {
            for &d in comp {
                if d == 0 {
                    return Err(AlgebraError::IllFormedConstants(format!(
                        "component {g} has a cyclic factor of order 0"
                    )));
                }
                orders.push(d);
            }
            offsets.push(orders.len());
        }
        let mut size: usize = 1;
        for &d in &orders {
            size = size
                .checked_mul(d as usize)
                .filter(|&s| s <= cap)
                .ok_or(AlgebraError::BudgetExceeded { what, cap })?;
        }
        let mut strides = vec![1; orders.len()];
        for j in (0..orders.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * orders[j + 1] as usize;
        }
        Ok(Presentation {
            orders,
            offsets,
            strides,
            size,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn order(&self, j: usize) -> u32 {
        self.orders[j]
    }

    pub fn coord(&self, idx: usize, j: usize) -> u32 {
        ((idx / self.strides[j]) % self.orders[j] as usize) as u32
    }

    pub fn coords(&self, idx: usize) -> Vec<u32> {
        (0..self.rank()).map(|j| self.coord(idx, j)).collect()
    }

    pub fn index(&self, coords: &[u32]) -> usize {
        coords
            .iter()
            .zip(&self.strides)
            .zip(&self.orders)
            .map(|((&c, &s), &d)| (c % d) as usize * s)
            .sum()
    }

    /// Coordinates that belong to component `g`.
    pub fn span(&self, g: usize) -> std::ops::Range<usize> {
        self.offsets[g]..self.offsets[g + 1]
    }

    /// The element with the given residues in component `t.grade` and zero
    /// elsewhere.
    pub fn embed(&self, t: &Tagged) -> Result<usize> {
        let span = self.span(t.grade);
        if span.len() != t.residues.len() {
            return Err(AlgebraError::IllFormedConstants(format!(
                "tuple of length {} for component {} with {} cyclic factors",
                t.residues.len(),
                t.grade,
                span.len()
            )));
        }
        let mut idx = 0;
        for (j, &r) in span.zip(&t.residues) {
            if r >= self.orders[j] {
                return Err(AlgebraError::IllFormedConstants(format!(
                    "residue {r} out of range for Z/{}",
                    self.orders[j]
                )));
            }
            idx += r as usize * self.strides[j];
        }
        Ok(idx)
    }

    /// The coordinate index of a generator tuple: exactly one residue equal
    /// to 1 on a factor of order > 1, all others zero.
    pub fn generator_of(&self, t: &Tagged) -> Result<usize> {
        self.embed(t)?;
        let span = self.span(t.grade);
        let nonzero: Vec<usize> = t
            .residues
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .map(|(i, _)| i)
            .collect();
        match nonzero.as_slice() {
            [i] if t.residues[*i] == 1 => Ok(span.start + i),
            _ => Err(AlgebraError::IllFormedConstants(format!(
                "{}:{} is not a generator tuple",
                t.grade,
                tuple(&t.residues)
            ))),
        }
    }

    /// Index of the generator `e_j`.
    pub fn generator(&self, j: usize) -> usize {
        self.strides[j] % self.size.max(1) * (self.orders[j] > 1) as usize
    }

    /// `idx + e_j`
    #[inline]
    pub fn succ(&self, idx: usize, j: usize) -> usize {
        let d = self.orders[j] as usize;
        if self.coord(idx, j) as usize + 1 < d {
            idx + self.strides[j]
        } else {
            idx - (d - 1) * self.strides[j]
        }
    }

    /// The least significant nonzero coordinate; `idx - stride` is then a
    /// smaller index.
    #[inline]
    pub fn last_nonzero(&self, idx: usize) -> Option<usize> {
        (0..self.rank()).rev().find(|&j| self.coord(idx, j) != 0)
    }

    pub fn stride(&self, j: usize) -> usize {
        self.strides[j]
    }

    pub fn neg(&self, idx: usize) -> usize {
        let c: Vec<u32> = (0..self.rank())
            .map(|j| (self.orders[j] - self.coord(idx, j)) % self.orders[j])
            .collect();
        self.index(&c)
    }

    pub fn scale(&self, idx: usize, k: u64) -> usize {
        let c: Vec<u32> = (0..self.rank())
            .map(|j| ((self.coord(idx, j) as u64 * k) % self.orders[j] as u64) as u32)
            .collect();
        self.index(&c)
    }

    /// Keep only the coordinates of component `g`.
    pub fn restrict(&self, idx: usize, g: usize) -> usize {
        self.span(g)
            .map(|j| self.coord(idx, j) as usize * self.strides[j])
            .sum()
    }

    pub fn label(&self, idx: usize) -> String {
        if self.rank() == 0 {
            return "0".to_string();
        }
        self.coords(idx)
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Full addition table, built incrementally from `succ`.
    pub fn add_table(&self) -> Vec<u32> {
        let n = self.size;
        let mut add = vec![0u32; n * n];
        for a in 0..n {
            add[a * n] = a as u32;
            for b in 1..n {
                let j = self.last_nonzero(b).expect("nonzero index");
                let prev = add[a * n + b - self.strides[j]] as usize;
                add[a * n + b] = self.succ(prev, j) as u32;
            }
        }
        add
    }
}

pub(crate) fn tuple(residues: &[u32]) -> String {
    let inner: Vec<String> = residues.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}
