//! Enumeration caps. Every brute-force or centralizer-sized routine checks its
//! input against one of these before allocating anything factorial-sized.

use crate::error::{check_cap, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which `S_n` may be enumerated element by element.
    pub perm_n: u32,
    /// Largest `n` for which higher Lie characters of `S_n` are computed.
    pub character_n: u32,
    /// Largest order of a centralizer streamed element by element.
    pub centralizer_order: u64,
    /// Largest `n` for which `B_n` may be enumerated element by element.
    pub signed_perm_n: u32,
    /// Largest `n` for which type-B higher Lie characters are computed.
    pub signed_character_n: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            perm_n: 8,
            character_n: 8,
            centralizer_order: 40_320,
            signed_perm_n: 6,
            signed_character_n: 5,
        }
    }
}

impl Limits {
    /// Caps large enough for anything the exact kernels can finish; only
    /// reachable through an explicit opt-in.
    pub fn unbounded() -> Self {
        Limits {
            perm_n: 12,
            character_n: 14,
            centralizer_order: 479_001_600,
            signed_perm_n: 9,
            signed_character_n: 9,
        }
    }

    /// Same caps with the `S_n` enumeration and character caps set to `n`.
    pub fn with_max_n(self, n: u32) -> Self {
        Limits {
            perm_n: n,
            character_n: n,
            ..self
        }
    }

    pub fn check_perm_n(&self, n: usize) -> Result<()> {
        check_cap("S_n enumeration size n", n as u64, u64::from(self.perm_n))
    }

    pub fn check_character_n(&self, n: usize) -> Result<()> {
        check_cap("character degree n", n as u64, u64::from(self.character_n))
    }

    pub fn check_signed_perm_n(&self, n: usize) -> Result<()> {
        check_cap(
            "B_n enumeration size n",
            n as u64,
            u64::from(self.signed_perm_n),
        )
    }

    pub fn check_signed_character_n(&self, n: usize) -> Result<()> {
        check_cap(
            "type-B character degree n",
            n as u64,
            u64::from(self.signed_character_n),
        )
    }

    pub fn check_centralizer(&self, order: u64) -> Result<()> {
        check_cap("centralizer order", order, self.centralizer_order)
    }
}
