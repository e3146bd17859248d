use crate::error::{Error, Result};
use crate::permgroup::{Permutation, PermutationGroup};

/// Named groups accepted by `--group-name`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupPreset {
    Symmetric,
    Alternating,
    Cyclic(usize),
    Klein4,
    Trivial,
}

impl GroupPreset {
    /// Parses `Sn`, `An`, `S<k>`/`A<k>` (with `k = n`), `cyclic:k`,
    /// `klein4` or `trivial`.
    pub fn parse(name: &str, n: usize) -> Result<Self> {
        let unknown = || Error::UnknownPreset(name.to_string());
        let degree_suffix = |rest: &str| -> Result<()> {
            match rest {
                "n" => Ok(()),
                digits if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
                    match digits.parse::<usize>() {
                        Ok(k) if k == n => Ok(()),
                        _ => Err(unknown()),
                    }
                }
                _ => Err(unknown()),
            }
        };
        if let Some(rest) = name.strip_prefix("cyclic:") {
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(unknown());
            }
            let k = rest.parse::<usize>().map_err(|_| unknown())?;
            if k == 0 {
                return Err(unknown());
            }
            return Ok(GroupPreset::Cyclic(k));
        }
        match name {
            "klein4" => Ok(GroupPreset::Klein4),
            "trivial" => Ok(GroupPreset::Trivial),
            _ => {
                if let Some(rest) = name.strip_prefix('S') {
                    degree_suffix(rest).map(|_| GroupPreset::Symmetric)
                } else if let Some(rest) = name.strip_prefix('A') {
                    degree_suffix(rest).map(|_| GroupPreset::Alternating)
                } else {
                    Err(unknown())
                }
            }
        }
    }

    pub fn generators(self, n: usize) -> Result<Vec<Permutation>> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let cycle = |pts: Vec<usize>| Permutation::from_cycles(n, &[pts]);
        match self {
            GroupPreset::Trivial => Ok(Vec::new()),
            GroupPreset::Symmetric if n == 1 => Ok(Vec::new()),
            GroupPreset::Symmetric => Ok(vec![cycle(vec![1, 2])?, cycle((1..=n).collect())?]),
            GroupPreset::Alternating => (3..=n).map(|i| cycle(vec![1, 2, i])).collect(),
            GroupPreset::Cyclic(k) => {
                if k > n {
                    return Err(Error::PresetDegree {
                        name: format!("cyclic:{k}"),
                        min: k,
                        n,
                    });
                }
                Ok(vec![cycle((1..=k).collect())?])
            }
            GroupPreset::Klein4 => {
                if n < 4 {
                    return Err(Error::PresetDegree {
                        name: "klein4".into(),
                        min: 4,
                        n,
                    });
                }
                Ok(vec![
                    Permutation::from_cycles(n, &[vec![1, 2], vec![3, 4]])?,
                    Permutation::from_cycles(n, &[vec![1, 3], vec![2, 4]])?,
                ])
            }
        }
    }

    pub fn build(self, n: usize) -> Result<PermutationGroup> {
        PermutationGroup::closure(self.generators(n)?, n)
    }
}
