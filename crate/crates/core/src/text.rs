use crate::error::{Error, Result};

/// Texts must leave room for `n + 1` in a `u32` (the padded LCP array).
pub const MAX_TEXT_LEN: usize = u32::MAX as usize - 1;

/// An input string of raw bytes.
///
/// Public accessors are 1-based: position `p` addresses the `p`-th byte,
/// valid for `1 <= p <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.len() > MAX_TEXT_LEN {
            return Err(Error::TextTooLong(bytes.len()));
        }
        Ok(Self { bytes })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Byte at 1-based position `p`.
    pub fn at(&self, p: usize) -> Result<u8> {
        self.check_position(p)?;
        Ok(self.bytes[p - 1])
    }

    /// Number of distinct byte values present.
    pub fn sigma(&self) -> usize {
        let mut seen = [false; 256];
        for &b in &self.bytes {
            seen[b as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    pub fn check_position(&self, k: usize) -> Result<()> {
        check_position(k, self.len())
    }

    /// Drops a single trailing `\n` (or `\r\n`).
    pub fn chomp(mut self) -> Self {
        if self.bytes.last() == Some(&b'\n') {
            self.bytes.pop();
            if self.bytes.last() == Some(&b'\r') {
                self.bytes.pop();
            }
        }
        self
    }
}

impl TryFrom<&str> for Text {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

impl TryFrom<&[u8]> for Text {
    type Error = Error;

    fn try_from(s: &[u8]) -> Result<Self> {
        Self::new(s)
    }
}

pub(crate) fn check_position(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        Err(Error::PositionOutOfRange { k, n })
    } else {
        Ok(())
    }
}
