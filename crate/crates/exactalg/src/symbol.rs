use std::fmt;

/// A variable name: 1..=8 bytes of ASCII stored inline, so that exponent
/// vectors stay small and `Copy`.
///
/// Ordering is byte-lexicographic, which for ASCII names equals string order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    bytes: [u8; 8],
}

impl Symbol {
    /// Create a symbol.
    ///
    /// # Panics
    /// If the name is empty, longer than 8 bytes, does not start with an
    /// ASCII letter, or contains anything but ASCII letters, digits, `_`.
    pub fn new(name: &str) -> Symbol {
        let b = name.as_bytes();
        assert!(
            !b.is_empty() && b.len() <= 8,
            "symbol name must be 1..=8 bytes: {name:?}"
        );
        assert!(
            b[0].is_ascii_alphabetic(),
            "symbol must start with a letter: {name:?}"
        );
        assert!(
            b.iter().all(|c| c.is_ascii_alphanumeric() || *c == b'_'),
            "symbol must be ASCII alphanumeric or '_': {name:?}"
        );
        let mut bytes = [0u8; 8];
        bytes[..b.len()].copy_from_slice(b);
        Symbol { bytes }
    }

    pub fn as_str(&self) -> &str {
        let end = self.bytes.iter().position(|&c| c == 0).unwrap_or(8);
        std::str::from_utf8(&self.bytes[..end]).unwrap()
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Shorthand for [`Symbol::new`].
pub fn sym(name: &str) -> Symbol {
    Symbol::new(name)
}
