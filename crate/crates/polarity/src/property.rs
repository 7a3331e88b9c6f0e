use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// The twelve maximum-subgraph quantities, in evaluation order.
///
/// Slots that carry a partition certificate use `A` for the complete
/// multipartite side and `B` for the cluster side of a polar partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PropertyKind {
    /// clique
    MC,
    /// independent set
    MI,
    /// bipartite
    MB,
    /// co-bipartite
    McB,
    /// split
    MS,
    /// cluster
    MUC,
    /// complete multipartite
    MJI,
    /// monopolar
    MM,
    /// co-monopolar
    McM,
    /// polar
    MP,
    /// unipolar
    MU,
    /// co-unipolar
    McU,
}

use PropertyKind::*;

impl PropertyKind {
    pub const ALL: [PropertyKind; 12] = [MC, MI, MB, McB, MS, MUC, MJI, MM, McM, MP, MU, McU];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn dual(self) -> PropertyKind {
        match self {
            MC => MI,
            MI => MC,
            MB => McB,
            McB => MB,
            MS => MS,
            MUC => MJI,
            MJI => MUC,
            MM => McM,
            McM => MM,
            MP => MP,
            MU => McU,
            McU => MU,
        }
    }

    /// Whether witnesses come with an `(A, B)` certificate.
    pub fn has_partition(self) -> bool {
        !matches!(self, MC | MI | MUC | MJI)
    }

    pub fn name(self) -> &'static str {
        match self {
            MC => "clique",
            MI => "independent",
            MB => "bipartite",
            McB => "co-bipartite",
            MS => "split",
            MUC => "cluster",
            MJI => "complete-multipartite",
            MM => "monopolar",
            McM => "co-monopolar",
            MP => "polar",
            MU => "unipolar",
            McU => "co-unipolar",
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            MC => "MC",
            MI => "MI",
            MB => "MB",
            McB => "McB",
            MS => "MS",
            MUC => "MUC",
            MJI => "MJI",
            MM => "MM",
            McM => "McM",
            MP => "MP",
            MU => "MU",
            McU => "McU",
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase().replace('_', "-");
        PropertyKind::ALL
            .into_iter()
            .find(|p| p.name() == t || p.short().to_ascii_lowercase() == t)
            .or(match t.as_str() {
                // spellings that appear in the literature for the same slot
                "mui" | "mij" => Some(MJI),
                "cobipartite" => Some(McB),
                "comonopolar" => Some(McM),
                "counipolar" => Some(McU),
                "multipartite" => Some(MJI),
                _ => None,
            })
            .ok_or_else(|| Error::Invalid(format!("unknown property {s:?}")))
    }
}
