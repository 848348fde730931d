//! The graph6 interchange format: printable ASCII, six bits per byte
//! offset by 63, upper adjacency triangle column-major.
//!
//! Layout per line: a size field N(n) -- one byte `n + 63` for n <= 62, or
//! `~` plus three bytes (18-bit n), or `~~` plus six bytes (36-bit n) --
//! followed by ceil(n(n-1)/2 / 6) data bytes holding the bits
//! x(0,1), x(0,2), x(1,2), x(0,3), ... most-significant first, zero padded.

use thiserror::Error;

use crate::graph::Graph;

const OFFSET: u8 = 63;
const ESCAPE: u8 = 126;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte 0x{byte:02x} at position {position} outside graph6 range 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("truncated size field at position {position}")]
    TruncatedSize { position: usize },
    #[error("truncated adjacency bits: need {needed} data bytes, found {found}")]
    TruncatedBits { needed: usize, found: usize },
    #[error("trailing garbage starting at position {position}")]
    TrailingGarbage { position: usize },
    #[error("nonzero padding bits in final byte at position {position}")]
    NonzeroPadding { position: usize },
    #[error("graphs of order 0 are not supported")]
    ZeroOrder,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: u64, max: u64 },
}

/// Upper bound accepted by the parser; keeps hostile size fields from
/// forcing giant allocations.
const MAX_ORDER: u64 = 100_000;

fn check_byte(bytes: &[u8], position: usize) -> Result<u8, CodecError> {
    match bytes.get(position) {
        None => Err(CodecError::TruncatedSize { position }),
        Some(&b) if !(OFFSET..=ESCAPE).contains(&b) => {
            Err(CodecError::ByteOutOfRange { position, byte: b })
        }
        Some(&b) => Ok(b),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and a trailing
/// CR are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, CodecError> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }

    // Size field.
    let pos;
    let b0 = check_byte(bytes, 0)?;
    let n: u64 = if b0 != ESCAPE {
        pos = 1;
        (b0 - OFFSET) as u64
    } else if bytes.get(1) == Some(&ESCAPE) {
        let mut n = 0u64;
        for i in 2..8 {
            n = n << 6 | (check_byte(bytes, i)? - OFFSET) as u64;
        }
        pos = 8;
        n
    } else {
        let mut n = 0u64;
        for i in 1..4 {
            n = n << 6 | (check_byte(bytes, i)? - OFFSET) as u64;
        }
        pos = 4;
        n
    };
    if n == 0 {
        return Err(CodecError::ZeroOrder);
    }
    if n > MAX_ORDER {
        return Err(CodecError::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    let n = n as usize;

    let bit_count = n * (n - 1) / 2;
    let needed = bit_count.div_ceil(6);
    let found = bytes.len() - pos;
    if found < needed {
        // Report the first out-of-range byte ahead of truncation, so that
        // corrupted data bytes get position-accurate diagnostics.
        for i in pos..bytes.len() {
            check_byte(bytes, i)?;
        }
        return Err(CodecError::TruncatedBits { needed, found });
    }
    if found > needed {
        for i in pos..pos + needed {
            check_byte(bytes, i)?;
        }
        return Err(CodecError::TrailingGarbage { position: pos + needed });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte_pos = pos + bit_index / 6;
            let value = check_byte(bytes, byte_pos)? - OFFSET;
            if value >> (5 - bit_index % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index >= bit_count {
                break 'outer;
            }
        }
    }
    // Padding bits in the final data byte must be zero.
    if bit_count % 6 != 0 {
        let last = check_byte(bytes, pos + needed - 1)? - OFFSET;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(CodecError::NonzeroPadding { position: pos + needed - 1 });
        }
    }

    Ok(Graph::new(n, &edges).expect("decoded edges are in range and loop-free"))
}

/// Encodes a graph as a graph6 line (no trailing newline), using the
/// minimal size-field form.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(ESCAPE);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(ESCAPE);
        out.push(ESCAPE);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hand_derived_encodings() {
        // K_1: header only.
        assert_eq!(write_graph6(&Graph::new(1, &[]).unwrap()), "@");

        // P_3 with edges {01, 12}: bits x01=1, x02=0, x12=1 -> 101000 = 40 -> 'g'.
        assert_eq!(write_graph6(&path(3)), "Bg");

        // K_4: six one-bits -> 111111 = 63 -> '~'.
        let mut k4_edges = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                k4_edges.push((a, b));
            }
        }
        assert_eq!(write_graph6(&Graph::new(4, &k4_edges).unwrap()), "C~");

        // C_5: bits 1,0,1,0,0,1 | 1,0,0,1(00) -> 41, 36 -> 'h', 'c'.
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(write_graph6(&c5), "Dhc");
    }

    #[test]
    fn parse_round_trip() {
        for g in [
            Graph::new(1, &[]).unwrap(),
            path(3),
            path(7),
            Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap(),
            Graph::new(6, &[]).unwrap(),
        ] {
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn header_and_crlf_tolerated() {
        let line = format!(">>graph6<<{}\r", write_graph6(&path(3)));
        assert_eq!(parse_graph6(&line).unwrap(), path(3));
    }

    #[test]
    fn long_form_size_field() {
        // n = 63 needs the 4-byte escape.
        let g = Graph::new(63, &[(0, 62)]).unwrap();
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejections_carry_positions() {
        assert_eq!(parse_graph6(""), Err(CodecError::Empty));
        assert_eq!(parse_graph6("?"), Err(CodecError::ZeroOrder));
        assert_eq!(
            parse_graph6(" g"),
            Err(CodecError::ByteOutOfRange { position: 0, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("B g"),
            Err(CodecError::ByteOutOfRange { position: 1, byte: b' ' })
        );
        assert_eq!(parse_graph6("B"), Err(CodecError::TruncatedBits { needed: 1, found: 0 }));
        assert_eq!(
            parse_graph6("Bgg"),
            Err(CodecError::TrailingGarbage { position: 2 })
        );
        // P_3 byte with a padding bit set: 101001 = 41 -> 'h'.
        assert_eq!(parse_graph6("Bh"), Err(CodecError::NonzeroPadding { position: 1 }));
        // Escaped size field cut short.
        assert_eq!(parse_graph6("~B"), Err(CodecError::TruncatedSize { position: 2 }));
    }
}
