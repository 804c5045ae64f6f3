use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::for_each_order;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::named::random_graph;

/// Where a campaign's graphs come from.
///
/// Text syntax: `gen:N[,connected][,triangle-free]` for every graph on
/// `1..=N` vertices up to isomorphism, `rand:N,P,COUNT,SEED` for `COUNT`
/// random graphs where graph `i` uses seed `SEED + i`, and anything else is a
/// path to a file of graph6 lines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorpusSource {
    File { path: PathBuf },
    Generate { n: usize, connected: bool, triangle_free: bool },
    Random { n: usize, p: f64, count: usize, seed: u64 },
}

fn number<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad {what} `{s}`")))
}

impl FromStr for CorpusSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("gen:") {
            let mut parts = rest.split(',');
            let n = number(parts.next().unwrap_or(""), "order")?;
            let (mut connected, mut triangle_free) = (false, false);
            for flag in parts {
                match flag.trim() {
                    "connected" => connected = true,
                    "triangle-free" | "triangle_free" => triangle_free = true,
                    other => return Err(Error::InvalidParameter(format!("unknown gen flag `{other}`"))),
                }
            }
            if n > 12 {
                return Err(Error::InvalidParameter(format!("gen order {n} is too large; use a graph6 file")));
            }
            Ok(CorpusSource::Generate { n, connected, triangle_free })
        } else if let Some(rest) = s.strip_prefix("rand:") {
            let parts: Vec<&str> = rest.split(',').collect();
            let [n, p, count, seed] = parts[..] else {
                return Err(Error::InvalidParameter("expected rand:N,P,COUNT,SEED".into()));
            };
            let n = number(n, "order")?;
            let p: f64 = number(p, "probability")?;
            if n > crate::graph::MAX_ORDER {
                return Err(Error::UnsupportedOrder(n));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
            }
            Ok(CorpusSource::Random { n, p, count: number(count, "count")?, seed: number(seed, "seed")? })
        } else if s.is_empty() {
            Err(Error::InvalidParameter("empty corpus".into()))
        } else {
            Ok(CorpusSource::File { path: PathBuf::from(s) })
        }
    }
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::File { path } => write!(f, "{}", path.display()),
            CorpusSource::Generate { n, connected, triangle_free } => {
                write!(f, "gen:{n}")?;
                if *connected {
                    f.write_str(",connected")?;
                }
                if *triangle_free {
                    f.write_str(",triangle-free")?;
                }
                Ok(())
            }
            CorpusSource::Random { n, p, count, seed } => write!(f, "rand:{n},{p},{count},{seed}"),
        }
    }
}

/// Parses a graph6 file body: one graph per line, blank lines ignored.
pub fn parse_graph6_lines(text: &[u8]) -> Result<Vec<Graph>> {
    text.split(|&b| b == b'\n')
        .enumerate()
        .filter(|(_, line)| !line.iter().all(u8::is_ascii_whitespace))
        .map(|(i, line)| {
            parse_graph6(line.trim_ascii()).map_err(|e| Error::CorpusRead(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

impl CorpusSource {
    /// Materializes the corpus in its fixed order.
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            CorpusSource::File { path } => {
                let bytes = std::fs::read(path).map_err(|e| Error::CorpusRead(format!("{}: {e}", path.display())))?;
                parse_graph6_lines(&bytes)
            }
            &CorpusSource::Generate { n, connected, triangle_free } => {
                let mut out = Vec::new();
                for_each_order(n, triangle_free, |_, level| {
                    out.extend(level.iter().filter(|g| !connected || g.is_connected()));
                });
                Ok(out)
            }
            &CorpusSource::Random { n, p, count, seed } => (0..count)
                .map(|i| random_graph(n, p, seed.wrapping_add(i as u64)))
                .collect(),
        }
    }
}
