//! graph6 encoding: order byte(s), then the upper triangle of the adjacency
//! matrix column by column in big-endian 6-bit groups, each stored as `value + 63`.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn emit(g: &Graph) -> String {
    let n = g.order();
    // n <= 32 always fits the one-byte order form
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses one record. A leading `>>graph6<<` header and a trailing line break are accepted.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadByte {
            offset,
            byte: bytes[offset],
        });
    }
    let (n, body) = read_order(bytes)?;
    if n > MAX_ORDER as u64 {
        return Err(Graph6Error::OrderOverflow(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Graph6Error::Truncated);
    }
    if body.len() > need {
        return Err(Graph6Error::TrailingData);
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if !bits.is_multiple_of(6) && (bits..need * 6).any(bit) {
        return Err(Graph6Error::BadPadding);
    }
    let mut g = Graph::empty(n).expect("order checked");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    Ok(g)
}

fn read_order(bytes: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let value = |b: &[u8]| b.iter().fold(0u64, |acc, &x| acc << 6 | (x - 63) as u64);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as u64, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::Truncated);
        }
        return Ok((value(&bytes[2..8]), &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::Truncated);
    }
    Ok((value(&bytes[1..4]), &bytes[4..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn known_encodings() {
        assert_eq!(emit(&complete(2).unwrap()), "A_");
        assert_eq!(emit(&Graph::empty(1).unwrap()), "@");
        assert_eq!(emit(&Graph::empty(0).unwrap()), "?");
        // C5 from the reference encoder: 0-1, 1-2, 2-3, 3-4, 0-4
        assert_eq!(emit(&cycle(5).unwrap()), "Dhc");
        assert_eq!(emit(&complete(4).unwrap()), "C~");
    }

    #[test]
    fn parses_records() {
        assert_eq!(parse("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
        assert_eq!(parse("Dhc\r\n").unwrap(), cycle(5).unwrap());
        assert_eq!(parse("?").unwrap(), Graph::empty(0).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse(""), Err(Graph6Error::Empty));
        assert_eq!(parse(">>graph6<<"), Err(Graph6Error::Empty));
        assert_eq!(parse("A"), Err(Graph6Error::Truncated));
        assert_eq!(parse("A__"), Err(Graph6Error::TrailingData));
        assert_eq!(parse("A`"), Err(Graph6Error::BadPadding));
        assert_eq!(
            parse("A "),
            Err(Graph6Error::BadByte {
                offset: 1,
                byte: b' '
            })
        );
        assert_eq!(parse("~??~"), Err(Graph6Error::OrderOverflow(63)));
        assert_eq!(parse("~~??"), Err(Graph6Error::Truncated));
        assert_eq!(parse("~?"), Err(Graph6Error::Truncated));
        // 33 vertices in the long form
        assert_eq!(parse("~??`"), Err(Graph6Error::OrderOverflow(33)));
    }

    #[test]
    fn long_order_form_within_limit() {
        // order 5 spelled in the 4-byte form is accepted
        assert_eq!(parse("~??Dhc").unwrap(), cycle(5).unwrap());
    }
}
