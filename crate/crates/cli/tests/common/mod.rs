//! Deterministic synthetic corpora for integration and acceptance tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform bytes drawn from `alphabet`.
pub fn random_text(rng: &mut impl Rng, len: usize, alphabet: &[u8]) -> Vec<u8> {
    (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect()
}

/// Random ACGT with occasional mutated copies of earlier stretches, so that
/// long repeats and ties occur.
pub fn dna_like(seed: u64, len: usize) -> Vec<u8> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        if out.len() > 10_000 && rng.gen_bool(0.05) {
            let copy_len = rng.gen_range(20..400).min(len - out.len());
            let from = rng.gen_range(0..out.len() - copy_len);
            for j in 0..copy_len {
                let b = if rng.gen_bool(0.01) {
                    b"ACGT"[rng.gen_range(0..4)]
                } else {
                    out[from + j]
                };
                out.push(b);
            }
        } else {
            let run = rng.gen_range(50..500).min(len - out.len());
            out.extend((0..run).map(|_| b"ACGT"[rng.gen_range(0..4)]));
        }
    }
    out
}

/// Zipf-distributed pseudo-words arranged in sentences and paragraphs.
pub fn english_like(seed: u64, len: usize) -> Vec<u8> {
    const SYLLABLES: &[&str] = &[
        "th", "e", "an", "in", "er", "on", "re", "ed", "nd", "ha", "at", "en", "es", "of", "or",
        "nt", "ea", "ti", "to", "it", "st", "io", "le", "is", "ou", "ar", "as", "de", "rt", "ve",
        "wh", "ch", "sh", "ly", "ing", "ght",
    ];
    let mut rng = rng(seed);
    let vocab: Vec<String> = (0..6000)
        .map(|_| {
            (0..rng.gen_range(1..4))
                .map(|_| SYLLABLES[rng.gen_range(0..SYLLABLES.len())])
                .collect()
        })
        .collect();
    let zipf = Zipf::new(vocab.len() as u64, 1.07).unwrap();

    let mut out = Vec::with_capacity(len + 64);
    let mut words_left_in_paragraph = rng.gen_range(40..200);
    while out.len() < len {
        let sentence = rng.gen_range(4..22);
        for w in 0..sentence {
            let word = &vocab[zipf.sample(&mut rng) as usize - 1];
            if w == 0 {
                let mut cs = word.chars();
                if let Some(c) = cs.next() {
                    out.extend(c.to_uppercase().to_string().bytes());
                    out.extend(cs.as_str().bytes());
                }
            } else {
                out.push(b' ');
                out.extend(word.bytes());
                if rng.gen_bool(0.06) {
                    out.push(b',');
                }
            }
        }
        out.push(if rng.gen_bool(0.9) { b'.' } else { b'?' });
        words_left_in_paragraph -= sentence;
        if words_left_in_paragraph <= 0 {
            out.extend_from_slice(b"\n\n");
            words_left_in_paragraph = rng.gen_range(40..200);
        } else {
            out.push(b' ');
        }
    }
    out.truncate(len);
    out
}
