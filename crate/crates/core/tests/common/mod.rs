#![allow(dead_code)]

pub mod derived;
pub mod oracle;

use nakayama::algebra::{KupischSeries, Module};

pub fn ks(s: &str) -> KupischSeries {
    s.parse().unwrap()
}

pub fn md(a: &KupischSeries, t: usize, l: usize) -> Module {
    a.module(t, l).unwrap()
}
