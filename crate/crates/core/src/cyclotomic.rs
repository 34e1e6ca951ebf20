//! q-cyclotomic cosets modulo n.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Partition of Z_n into orbits of `j ↦ q·j mod n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    n: u64,
    q: u64,
    /// Leader → members, sorted ascending.
    cosets: BTreeMap<u64, Vec<u64>>,
    /// Residue → leader of its coset.
    leader_of: Vec<u64>,
    leaders: Vec<u64>,
}

impl CosetTable {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        if n.gcd(&q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        let mut leader_of = vec![u64::MAX; n as usize];
        let mut cosets = BTreeMap::new();
        let qm = q % n;
        for j in 0..n {
            if leader_of[j as usize] != u64::MAX {
                continue;
            }
            let mut members = vec![j];
            leader_of[j as usize] = j;
            let mut k = ((j as u128 * qm as u128) % n as u128) as u64;
            while k != j {
                leader_of[k as usize] = j;
                members.push(k);
                k = ((k as u128 * qm as u128) % n as u128) as u64;
            }
            members.sort_unstable();
            cosets.insert(j, members);
        }
        let leaders = cosets.keys().copied().collect();
        Ok(CosetTable {
            n,
            q,
            cosets,
            leader_of,
            leaders,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Coset leaders Γ, ascending.
    pub fn leaders(&self) -> &[u64] {
        &self.leaders
    }

    /// Leader of the coset containing `j mod n`; negative residues allowed.
    pub fn leader_of(&self, j: i64) -> u64 {
        self.leader_of[j.rem_euclid(self.n as i64) as usize]
    }

    /// Sorted members of the coset led by `leader`.
    pub fn coset(&self, leader: u64) -> Result<&[u64]> {
        self.cosets
            .get(&leader)
            .map(Vec::as_slice)
            .ok_or(Error::NotLeader(leader))
    }

    /// ℓ_i, the size of the coset led by `leader`.
    pub fn size(&self, leader: u64) -> Result<usize> {
        Ok(self.coset(leader)?.len())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &[u64])> {
        self.cosets.iter().map(|(&l, v)| (l, v.as_slice()))
    }

    /// ν_i = (m·ρ_i / ℓ_i) mod 2, where ρ_i counts the even members of C_i.
    /// Defined only for q = 2.
    pub fn nu(&self, leader: u64, m: u32) -> Result<u8> {
        if self.q != 2 {
            return Err(Error::InvalidParameter(format!(
                "ν is defined for q = 2 only, got q = {}",
                self.q
            )));
        }
        let coset = self.coset(leader)?;
        let rho = coset.iter().filter(|&&j| j % 2 == 0).count() as u64;
        let ell = coset.len() as u64;
        let num = m as u64 * rho;
        if num % ell != 0 {
            return Err(Error::InvalidParameter(format!(
                "m·ρ/ℓ = {num}/{ell} is not integral"
            )));
        }
        Ok(((num / ell) % 2) as u8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_7() {
        let t = CosetTable::new(7, 2).unwrap();
        assert_eq!(t.leaders(), &[0, 1, 3]);
        assert_eq!(t.coset(1).unwrap(), &[1, 2, 4]);
        assert_eq!(t.coset(3).unwrap(), &[3, 5, 6]);
        assert_eq!(t.leader_of(-1), 3);
        assert_eq!(t.coset(2).unwrap_err(), Error::NotLeader(2));
    }

    #[test]
    fn cosets_mod_15() {
        let t = CosetTable::new(15, 2).unwrap();
        assert_eq!(t.leaders(), &[0, 1, 3, 5, 7]);
        let sizes: Vec<usize> = t.leaders().iter().map(|&l| t.size(l).unwrap()).collect();
        assert_eq!(sizes, vec![1, 4, 4, 2, 4]);
    }

    #[test]
    fn singletons_when_q_is_one_mod_n() {
        let t = CosetTable::new(4, 5).unwrap();
        assert_eq!(t.leaders(), &[0, 1, 2, 3]);
        let t = CosetTable::new(1, 2).unwrap();
        assert_eq!(t.leaders(), &[0]);
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(
            CosetTable::new(6, 2).unwrap_err(),
            Error::NotCoprime { n: 6, q: 2 }
        );
    }

    #[test]
    fn nu_examples() {
        let t = CosetTable::new(7, 2).unwrap();
        assert_eq!(t.nu(0, 3).unwrap(), 1);
        assert_eq!(t.nu(1, 3).unwrap(), 0);
        assert_eq!(t.nu(3, 3).unwrap(), 1);
        assert!(matches!(t.nu(2, 3), Err(Error::NotLeader(2))));
        let t3 = CosetTable::new(8, 3).unwrap();
        assert!(matches!(t3.nu(0, 2), Err(Error::InvalidParameter(_))));
    }
}
