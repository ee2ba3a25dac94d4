use core::fmt;

use num_integer::Integer;

/// The ring of integers mod `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Zm {
    m: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModulusError(pub u32);

impl fmt::Display for ModulusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "modulus {} is below 2", self.0)
    }
}

impl core::error::Error for ModulusError {}

impl Zm {
    pub fn new(m: u32) -> Result<Self, ModulusError> {
        if m < 2 {
            Err(ModulusError(m))
        } else {
            Ok(Zm { m })
        }
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.m as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.m as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.reduce(a as i64 - b as i64)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.m as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn is_unit(&self, a: u32) -> bool {
        a.gcd(&self.m) == 1
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        let e = (a as i64).extended_gcd(&(self.m as i64));
        (e.gcd == 1).then(|| self.reduce(e.x))
    }

    pub fn is_field(&self) -> bool {
        (2..self.m).take_while(|d| d * d <= self.m).all(|d| !self.m.is_multiple_of(d))
    }
}
