//! Append-only result cache: one `graph6<TAB>invariant<TAB>value` line per
//! solved graph, keyed by canonical form.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use gvcrit::canon::canonical_graph;
use gvcrit::{graph6, Evaluator, InvariantId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    /// Canonical graph6 of the graph.
    pub canonical: String,
    pub invariant: InvariantId,
    pub value: usize,
}

impl CacheEntry {
    pub fn to_line(&self) -> String {
        format!("{}\t{}\t{}", self.canonical, self.invariant, self.value)
    }
}

/// Parses one cache line, rejecting anything that could not have been written
/// by [`ResultCache::append`]: wrong field count, bad graph6, a key that is
/// not in canonical form, or a value no graph of that order can have.
pub fn parse_line(line: &str) -> Option<CacheEntry> {
    let mut fields = line.split('\t');
    let (canonical, invariant, value) = (fields.next()?, fields.next()?, fields.next()?);
    if fields.next().is_some() {
        return None;
    }
    let g = graph6::parse(canonical).ok()?;
    if graph6::emit(&canonical_graph(&g)) != canonical {
        return None;
    }
    let invariant: InvariantId = invariant.parse().ok()?;
    if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) || value.len() > 2 {
        return None;
    }
    let value: usize = value.parse().ok()?;
    let n = g.order();
    let plausible = if n == 0 {
        value == 0
    } else {
        (1..=n).contains(&value)
    };
    plausible.then(|| CacheEntry {
        canonical: canonical.to_string(),
        invariant,
        value,
    })
}

pub struct ResultCache {
    path: PathBuf,
    entries: Vec<CacheEntry>,
    corrupt: usize,
    writer: Mutex<File>,
}

impl ResultCache {
    /// Opens or creates the cache file and reads every valid entry. A final
    /// line without a newline is treated as a torn write and truncated away.
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut file = OpenOptions::new()
            .read(true)
            .append(true)
            .create(true)
            .open(&path)?;
        let mut entries = Vec::new();
        let mut corrupt = 0;
        let mut last_complete = true;
        for line in BufReader::new(&file).split(b'\n') {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            match std::str::from_utf8(&line).ok().and_then(parse_line) {
                Some(e) => entries.push(e),
                None => corrupt += 1,
            }
        }
        let len = file.metadata()?.len();
        if len > 0 {
            file.seek(SeekFrom::Start(len - 1))?;
            let mut last = [0u8];
            file.read_exact(&mut last)?;
            last_complete = last[0] == b'\n';
        }
        if !last_complete {
            if entries.pop().is_some() {
                corrupt += 1;
            }
            // drop the torn bytes so a later newline cannot complete them into
            // a plausible but wrong entry
            let mut data = Vec::new();
            file.seek(SeekFrom::Start(0))?;
            file.read_to_end(&mut data)?;
            let keep = data.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
            file.set_len(keep as u64)?;
        }
        Ok(ResultCache {
            path,
            entries,
            corrupt,
            writer: Mutex::new(file),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn entries(&self) -> &[CacheEntry] {
        &self.entries
    }

    /// Lines skipped while loading.
    pub fn corrupt_lines(&self) -> usize {
        self.corrupt
    }

    pub fn preload(&self, evaluator: &Evaluator) {
        for e in &self.entries {
            evaluator.preload(e.canonical.clone().into_bytes(), e.invariant, e.value);
        }
    }

    pub fn append(&self, entries: &[CacheEntry]) -> io::Result<()> {
        if entries.is_empty() {
            return Ok(());
        }
        let mut text = String::new();
        for e in entries {
            text.push_str(&e.to_line());
            text.push('\n');
        }
        let mut file = self.writer.lock().expect("cache writer lock");
        file.write_all(text.as_bytes())?;
        file.flush()
    }

    /// Appends everything the evaluator computed since it was last drained.
    pub fn persist_fresh(&self, evaluator: &Evaluator) -> io::Result<usize> {
        let fresh: Vec<CacheEntry> = evaluator
            .take_fresh()
            .into_iter()
            .map(|(canonical, invariant, value)| CacheEntry {
                canonical: String::from_utf8(canonical).expect("graph6 is ASCII"),
                invariant,
                value,
            })
            .collect();
        self.append(&fresh)?;
        Ok(fresh.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_validation() {
        assert_eq!(
            parse_line("A_\tchi_g\t2"),
            Some(CacheEntry {
                canonical: "A_".into(),
                invariant: InvariantId::ChiG,
                value: 2
            })
        );
        assert_eq!(parse_line("?\tchi_i\t0").map(|e| e.value), Some(0));
        assert!(parse_line("A_\tchi_g\t3").is_none());
        assert!(parse_line("A_\tchi_x\t2").is_none());
        assert!(parse_line("A_\tchi_g").is_none());
        assert!(parse_line("A_\tchi_g\t2\t9").is_none());
        assert!(parse_line("A_\tchi_g\t+2").is_none());
        assert!(parse_line("A_\tchi_g\t0").is_none());
        // every labeling of P3 is valid graph6, only the canonical one is a key
        let canon = graph6::emit(&canonical_graph(&gvcrit::families::path(3).unwrap()));
        let mut rejected = 0;
        for center in 0..3 {
            let ends: Vec<usize> = (0..3).filter(|&v| v != center).collect();
            let g = gvcrit::Graph::from_edges(3, &[(center, ends[0]), (center, ends[1])]).unwrap();
            let text = graph6::emit(&g);
            let parsed = parse_line(&format!("{text}\tchi_g\t2"));
            assert_eq!(parsed.is_some(), text == canon);
            rejected += usize::from(parsed.is_none());
        }
        assert_eq!(rejected, 2);
        assert!(parse_line(&format!("{canon}\tchi_g\t2")).is_some());
    }
}
