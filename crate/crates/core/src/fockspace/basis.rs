use crate::error::{Error, Result};

use super::config::{check_sites, FockConfig, Spin};

/// Which configurations a state is stored over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// All 4^L configurations.
    Full,
    /// Only configurations with exactly `n_up` up and `n_down` down electrons.
    Sector { n_up: usize, n_down: usize },
}

/// Enumeration of configurations with O(1) indexing.
///
/// A configuration's index is `rank(up) * len(down_list) + rank(down)`, with
/// ranks taken in ascending integer order of the bit-sets, so for the full
/// space the index is exactly [`FockConfig::full_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    sites: usize,
    kind: BasisKind,
    up_list: Vec<u32>,
    down_list: Vec<u32>,
    up_rank: Vec<u32>,
    down_rank: Vec<u32>,
}

const ABSENT: u32 = u32::MAX;

fn bitsets(sites: usize, count: Option<usize>) -> (Vec<u32>, Vec<u32>) {
    let total = 1usize << sites;
    let mut list = Vec::new();
    let mut rank = vec![ABSENT; total];
    for bits in 0..total as u32 {
        if count.is_none_or(|c| bits.count_ones() as usize == c) {
            rank[bits as usize] = list.len() as u32;
            list.push(bits);
        }
    }
    (list, rank)
}

impl Basis {
    pub fn full(sites: usize) -> Result<Self> {
        check_sites(sites)?;
        let (list, rank) = bitsets(sites, None);
        Ok(Basis {
            sites,
            kind: BasisKind::Full,
            up_list: list.clone(),
            down_list: list,
            up_rank: rank.clone(),
            down_rank: rank,
        })
    }

    pub fn sector(sites: usize, n_up: usize, n_down: usize) -> Result<Self> {
        check_sites(sites)?;
        if n_up > sites || n_down > sites {
            return Err(Error::InvalidSector {
                sites,
                n_up,
                n_down,
            });
        }
        let (up_list, up_rank) = bitsets(sites, Some(n_up));
        let (down_list, down_rank) = bitsets(sites, Some(n_down));
        Ok(Basis {
            sites,
            kind: BasisKind::Sector { n_up, n_down },
            up_list,
            down_list,
            up_rank,
            down_rank,
        })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn sector_counts(&self) -> Option<(usize, usize)> {
        match self.kind {
            BasisKind::Full => None,
            BasisKind::Sector { n_up, n_down } => Some((n_up, n_down)),
        }
    }

    pub fn dim(&self) -> usize {
        self.up_list.len() * self.down_list.len()
    }

    /// Bit-sets allowed for one spin species, in ascending order.
    pub fn spin_bitsets(&self, spin: Spin) -> &[u32] {
        match spin {
            Spin::Up => &self.up_list,
            Spin::Down => &self.down_list,
        }
    }

    #[inline]
    pub fn config(&self, index: usize) -> FockConfig {
        let nd = self.down_list.len();
        FockConfig::new_unchecked(
            self.sites,
            self.up_list[index / nd],
            self.down_list[index % nd],
        )
    }

    #[inline]
    pub fn index_of(&self, config: &FockConfig) -> Option<usize> {
        if config.sites() != self.sites {
            return None;
        }
        let ru = self.up_rank[config.up_bits() as usize];
        let rd = self.down_rank[config.down_bits() as usize];
        if ru == ABSENT || rd == ABSENT {
            return None;
        }
        Some(ru as usize * self.down_list.len() + rd as usize)
    }

    pub fn configs(&self) -> impl Iterator<Item = FockConfig> + '_ {
        (0..self.dim()).map(move |i| self.config(i))
    }

    /// Basis reached from this one by a single creation (`delta = +1`) or
    /// annihilation (`delta = -1`) of the given spin. `None` when no
    /// configuration survives.
    pub(crate) fn shifted(&self, spin: Spin, create: bool) -> Result<Option<Basis>> {
        match self.kind {
            BasisKind::Full => Ok(Some(self.clone())),
            BasisKind::Sector { n_up, n_down } => {
                let (mut u, mut d) = (n_up as isize, n_down as isize);
                let step = if create { 1 } else { -1 };
                match spin {
                    Spin::Up => u += step,
                    Spin::Down => d += step,
                }
                if u < 0 || d < 0 || u as usize > self.sites || d as usize > self.sites {
                    return Ok(None);
                }
                Basis::sector(self.sites, u as usize, d as usize).map(Some)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_basis_indexing_matches_full_index() {
        let b = Basis::full(3).unwrap();
        assert_eq!(b.dim(), 64);
        for (i, c) in b.configs().enumerate() {
            assert_eq!(c.full_index(), i);
            assert_eq!(b.index_of(&c), Some(i));
        }
    }

    #[test]
    fn sector_dimension_is_binomial_product() {
        let b = Basis::sector(6, 2, 3).unwrap();
        assert_eq!(b.dim(), 15 * 20);
        let mut last = None;
        for (i, c) in b.configs().enumerate() {
            assert_eq!(c.count(Spin::Up), 2);
            assert_eq!(c.count(Spin::Down), 3);
            assert_eq!(b.index_of(&c), Some(i));
            // ordering agrees with the full-space ordering
            if let Some(prev) = last {
                assert!(c.full_index() > prev);
            }
            last = Some(c.full_index());
        }
        let outside = FockConfig::new(6, 0b111, 0b111).unwrap();
        assert_eq!(b.index_of(&outside), None);
    }

    #[test]
    fn invalid_sector_rejected() {
        assert!(Basis::sector(3, 4, 0).is_err());
    }
}
