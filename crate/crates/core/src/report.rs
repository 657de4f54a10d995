//! The closure report printed by `snclosure closure`.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::closure::{close_with, CloseOptions, ClosureRing};
use crate::error::{Error, Result};
use crate::ring::RankRing;
use crate::spec_file::spec_hash;
use crate::tensor::TensorWord;

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub graded: bool,
    pub basis: bool,
    pub structure: bool,
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedRow {
    pub content: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Product {
    pub left: String,
    pub right: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub spec_sha256: String,
    pub base: String,
    pub n: usize,
    pub ambient_dim: usize,
    pub generators: usize,
    pub ideal_rank: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub etale: bool,
    pub ring_discriminant: String,
    /// `None` when the closure has torsion or no word basis.
    pub closure_discriminant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded: Option<Vec<GradedRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue_basis: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<Vec<Product>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

/// `x_1 y_2`-style label; `1` for the unit word.
pub fn word_label(ring: &RankRing, word: &TensorWord) -> String {
    let names = ring.names();
    let parts: Vec<String> = word
        .digits()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(slot, &d)| format!("{}_{}", names[d], slot + 1))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn linear_combination(labels: &[String], coords: &[crate::scalar::Scalar]) -> String {
    let terms: Vec<String> = coords
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| match (c.is_one(), l.as_str()) {
            (_, "1") => c.to_string(),
            (true, _) => l.clone(),
            _ => format!("{c}*{l}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

impl ClosureReport {
    /// Closes `ring` and collects the report; `spec_bytes` is the file the
    /// ring was read from (hashed, not parsed).
    pub fn build(
        spec_bytes: &[u8],
        ring: &RankRing,
        close_opts: &CloseOptions,
        opts: ReportOptions,
    ) -> Result<Self> {
        let start = Instant::now();
        let g = close_with(ring, close_opts)?;
        Self::from_closure(spec_bytes, &g, opts, start)
    }

    fn from_closure(
        spec_bytes: &[u8],
        g: &ClosureRing,
        opts: ReportOptions,
        start: Instant,
    ) -> Result<Self> {
        let ring = g.ring();
        let closure_discriminant = match g.closure_discriminant() {
            Ok(d) => Some(d.to_string()),
            Err(Error::TorsionPresent | Error::NoWordBasis) => None,
            Err(e) => return Err(e),
        };
        let graded = if opts.graded && ring.is_degenerate() {
            let dims = g.graded_dims()?;
            Some(
                dims.by_content
                    .into_iter()
                    .filter(|(_, d)| *d > 0)
                    .map(|(content, dim)| GradedRow { content, dim })
                    .collect(),
            )
        } else {
            None
        };
        let basis_words = g.residue_basis();
        let labels: Option<Vec<String>> = basis_words
            .as_ref()
            .map(|ws| ws.iter().map(|w| word_label(ring, w)).collect());
        let structure = if opts.structure {
            match (g.structure_constants(), &labels) {
                (Ok(c), Some(labels)) => {
                    let mut out = Vec::new();
                    for i in 0..c.len() {
                        for j in i..c.len() {
                            out.push(Product {
                                left: labels[i].clone(),
                                right: labels[j].clone(),
                                value: linear_combination(labels, &c[i][j]),
                            });
                        }
                    }
                    Some(out)
                }
                (Err(Error::TorsionPresent | Error::NoWordBasis), _) | (_, None) => None,
                (Err(e), _) => return Err(e),
            }
        } else {
            None
        };
        Ok(ClosureReport {
            spec_sha256: spec_hash(spec_bytes),
            base: g.base().to_string(),
            n: g.n(),
            ambient_dim: g.ambient_dim(),
            generators: g.generator_count(),
            ideal_rank: g.ideal_rank(),
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(|d| d.to_string()).collect(),
            etale: ring.is_etale(),
            ring_discriminant: ring.discriminant().to_string(),
            closure_discriminant,
            graded,
            residue_basis: if opts.basis { labels } else { None },
            structure,
            wall_time_secs: opts.timing.then(|| start.elapsed().as_secs_f64()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spec sha256:          {}", self.spec_sha256)?;
        writeln!(f, "base:                 {}", self.base)?;
        writeln!(f, "n:                    {}", self.n)?;
        writeln!(f, "ambient dimension:    {}", self.ambient_dim)?;
        writeln!(f, "relation generators:  {}", self.generators)?;
        writeln!(f, "ideal rank:           {}", self.ideal_rank)?;
        writeln!(f, "free rank:            {}", self.free_rank)?;
        let torsion = if self.torsion.is_empty() {
            "none".to_string()
        } else {
            self.torsion.join(" ")
        };
        writeln!(f, "torsion:              {torsion}")?;
        writeln!(
            f,
            "ring etale:           {}",
            if self.etale { "yes" } else { "no" }
        )?;
        writeln!(f, "ring discriminant:    {}", self.ring_discriminant)?;
        match &self.closure_discriminant {
            Some(d) => writeln!(f, "closure discriminant: {d}")?,
            None if !self.torsion.is_empty() => {
                writeln!(f, "closure discriminant: undefined (torsion present)")?
            }
            None => writeln!(
                f,
                "closure discriminant: undefined (no residue basis of words)"
            )?,
        }
        if let Some(rows) = &self.graded {
            writeln!(f, "graded dimensions (content: dim):")?;
            for r in rows {
                let c: Vec<String> = r.content.iter().map(|x| x.to_string()).collect();
                writeln!(f, "  ({}): {}", c.join(","), r.dim)?;
            }
        }
        if let Some(words) = &self.residue_basis {
            writeln!(f, "residue basis ({} words):", words.len())?;
            for w in words {
                writeln!(f, "  {w}")?;
            }
        }
        if let Some(prods) = &self.structure {
            writeln!(f, "structure constants:")?;
            for p in prods {
                writeln!(f, "  ({}) * ({}) = {}", p.left, p.right, p.value)?;
            }
        }
        if let Some(t) = self.wall_time_secs {
            writeln!(f, "wall time:            {t:.3} s")?;
        }
        Ok(())
    }
}
