use std::fmt;

use crate::error::{Error, Result};

/// Largest lattice the dense representation accepts.
pub const MAX_SITES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Up, Spin::Down];
}

/// Occupation of one site, in the order used for every 4x4 site matrix:
/// hole, double, up-only, down-only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalState {
    Hole = 0,
    Double = 1,
    Up = 2,
    Down = 3,
}

impl LocalState {
    pub const ALL: [LocalState; 4] = [
        LocalState::Hole,
        LocalState::Double,
        LocalState::Up,
        LocalState::Down,
    ];

    pub fn from_bits(up: bool, down: bool) -> Self {
        match (up, down) {
            (false, false) => LocalState::Hole,
            (true, true) => LocalState::Double,
            (true, false) => LocalState::Up,
            (false, true) => LocalState::Down,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            LocalState::Hole => (false, false),
            LocalState::Double => (true, true),
            LocalState::Up => (true, false),
            LocalState::Down => (false, true),
        }
    }

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }
}

/// One basis configuration: an up and a down occupation bit-set over `sites`
/// sites. Bit `i` of `up` is set when site `i` holds an up electron.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FockConfig {
    up: u32,
    down: u32,
    sites: u8,
}

impl FockConfig {
    pub fn new(sites: usize, up: u32, down: u32) -> Result<Self> {
        check_sites(sites)?;
        let mask = site_mask(sites);
        if up & !mask != 0 || down & !mask != 0 {
            return Err(Error::SiteOutOfRange {
                site: (32 - (up | down).leading_zeros()) as usize - 1,
                sites,
            });
        }
        Ok(Self::new_unchecked(sites, up, down))
    }

    #[inline]
    pub(crate) fn new_unchecked(sites: usize, up: u32, down: u32) -> Self {
        FockConfig {
            up,
            down,
            sites: sites as u8,
        }
    }

    pub fn empty(sites: usize) -> Result<Self> {
        Self::new(sites, 0, 0)
    }

    /// Builds a configuration from one local state per site.
    pub fn from_locals(locals: &[LocalState]) -> Result<Self> {
        let (mut up, mut down) = (0u32, 0u32);
        for (i, s) in locals.iter().enumerate() {
            let (u, d) = s.bits();
            up |= (u as u32) << i;
            down |= (d as u32) << i;
        }
        Self::new(locals.len(), up, down)
    }

    #[inline]
    pub fn sites(&self) -> usize {
        self.sites as usize
    }

    #[inline]
    pub fn up_bits(&self) -> u32 {
        self.up
    }

    #[inline]
    pub fn down_bits(&self) -> u32 {
        self.down
    }

    #[inline]
    pub fn bits(&self, spin: Spin) -> u32 {
        match spin {
            Spin::Up => self.up,
            Spin::Down => self.down,
        }
    }

    #[inline]
    pub fn is_occupied(&self, site: usize, spin: Spin) -> bool {
        self.bits(spin) >> site & 1 == 1
    }

    #[inline]
    pub fn local(&self, site: usize) -> LocalState {
        LocalState::from_bits(
            self.is_occupied(site, Spin::Up),
            self.is_occupied(site, Spin::Down),
        )
    }

    pub fn with_local(&self, site: usize, state: LocalState) -> Self {
        let (u, d) = state.bits();
        let bit = 1u32 << site;
        let up = if u { self.up | bit } else { self.up & !bit };
        let down = if d { self.down | bit } else { self.down & !bit };
        Self::new_unchecked(self.sites(), up, down)
    }

    #[inline]
    pub fn count(&self, spin: Spin) -> usize {
        self.bits(spin).count_ones() as usize
    }

    /// Number of doubly-occupied sites.
    #[inline]
    pub fn doubles(&self) -> usize {
        (self.up & self.down).count_ones() as usize
    }

    /// Position in the full 4^L ordering: the integer `(up << L) | down`.
    #[inline]
    pub fn full_index(&self) -> usize {
        ((self.up as usize) << self.sites) | self.down as usize
    }

    /// Number of occupied modes that precede `(site, spin)` in the operator
    /// ordering (all up modes by site, then all down modes by site).
    #[inline]
    pub fn modes_before(&self, site: usize, spin: Spin) -> u32 {
        let below = (1u32 << site) - 1;
        match spin {
            Spin::Up => (self.up & below).count_ones(),
            Spin::Down => self.up.count_ones() + (self.down & below).count_ones(),
        }
    }

    /// Applies `c†` (or `c` when `create` is false) to this basis state.
    /// Returns the resulting configuration and its sign, or `None` when the
    /// operator annihilates the state.
    #[inline]
    pub fn apply_mode(&self, site: usize, spin: Spin, create: bool) -> Option<(Self, bool)> {
        if self.is_occupied(site, spin) == create {
            return None;
        }
        let negative = self.modes_before(site, spin) % 2 == 1;
        let bit = 1u32 << site;
        let (up, down) = match spin {
            Spin::Up => (self.up ^ bit, self.down),
            Spin::Down => (self.up, self.down ^ bit),
        };
        Some((Self::new_unchecked(self.sites(), up, down), negative))
    }
}

impl fmt::Debug for FockConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|")?;
        for i in 0..self.sites() {
            if i > 0 {
                write!(f, ",")?;
            }
            let s = match self.local(i) {
                LocalState::Hole => "0",
                LocalState::Double => "2",
                LocalState::Up => "u",
                LocalState::Down => "d",
            };
            write!(f, "{s}")?;
        }
        write!(f, ">")
    }
}

pub(crate) fn check_sites(sites: usize) -> Result<()> {
    if sites == 0 || sites > MAX_SITES {
        return Err(Error::UnsupportedSize {
            sites,
            max: MAX_SITES,
        });
    }
    Ok(())
}

#[inline]
pub(crate) fn site_mask(sites: usize) -> u32 {
    (1u32 << sites) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_states_follow_bit_pairs() {
        let c = FockConfig::new(4, 0b0101, 0b0110).unwrap();
        assert_eq!(c.local(0), LocalState::Up);
        assert_eq!(c.local(1), LocalState::Down);
        assert_eq!(c.local(2), LocalState::Double);
        assert_eq!(c.local(3), LocalState::Hole);
        assert_eq!(c.doubles(), 1);
        assert_eq!(format!("{c:?}"), "|u,d,2,0>");
    }

    #[test]
    fn bits_beyond_lattice_rejected() {
        assert!(FockConfig::new(3, 0b1000, 0).is_err());
        assert!(FockConfig::new(0, 0, 0).is_err());
        assert!(FockConfig::new(13, 0, 0).is_err());
    }

    #[test]
    fn full_index_is_concatenated_bitsets() {
        let c = FockConfig::new(3, 0b101, 0b010).unwrap();
        assert_eq!(c.full_index(), (0b101 << 3) | 0b010);
    }

    #[test]
    fn down_modes_see_every_up_electron() {
        let c = FockConfig::new(3, 0b110, 0b001).unwrap();
        assert_eq!(c.modes_before(0, Spin::Up), 0);
        assert_eq!(c.modes_before(2, Spin::Up), 1);
        assert_eq!(c.modes_before(0, Spin::Down), 2);
        assert_eq!(c.modes_before(2, Spin::Down), 3);
    }

    #[test]
    fn from_locals_round_trip() {
        let locals = [LocalState::Double, LocalState::Hole, LocalState::Down];
        let c = FockConfig::from_locals(&locals).unwrap();
        for (i, s) in locals.iter().enumerate() {
            assert_eq!(c.local(i), *s);
        }
        assert_eq!(c.with_local(1, LocalState::Up).local(1), LocalState::Up);
    }
}
