//! graph6 text encoding (McKay's format).
//!
//! The size prefix is one byte `n + 63` for `n <= 62`, otherwise `126`
//! followed by three 6-bit groups. The body is the upper triangle read
//! column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed six bits per
//! printable byte with an offset of 63 and zero padding at the end.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Upper-triangle bits in graph6 column order, packed most significant bit
/// first into 6-bit groups.
pub(crate) fn upper_triangle_sextets(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(bits.div_ceil(6));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | (row >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    out.extend(upper_triangle_sextets(g).into_iter().map(|s| s + 63));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(bad) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {bad} is outside the printable range")));
    }
    let (n, body) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Error::Graph6("unsupported or truncated size header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Order(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} body bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let sextet = body[k / 6] - 63;
            if sextet >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        let last = body[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::empty(2).unwrap()), "A?");
        // P4 0-1-2-3: bits x01=1 x02=0 x12=1 x03=0 x13=0 x23=1 -> 101001 = 41
        assert_eq!(encode(&Graph::path(4).unwrap()), "Ch");
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn large_order_header() {
        let g = Graph::path(64).unwrap();
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
        let g = Graph::cycle(63).unwrap();
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(decode("garbage\x01").is_err());
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("Ch?").is_err());
        // K2 with a padding bit set
        assert!(decode("A`").is_err());
        assert!(decode("?").is_err());
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(decode(">>graph6<<Ch\n").unwrap(), Graph::path(4).unwrap());
    }
}
