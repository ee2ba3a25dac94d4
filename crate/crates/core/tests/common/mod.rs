#![allow(dead_code)]

use bmq_core::biquandle::{Biquandle, BiquandleMap};
use bmq_core::codec::parse_diagram;
use bmq_core::diagram::Diagram;
use bmq_core::module::BiquandleModule;
use bmq_core::ring::Zm;

pub const FIGURE_EIGHT: &str = "C+[4,1,5,2] C+[8,5,1,6] C-[6,3,7,4] C-[2,7,3,8]";
pub const TREFOIL: &str = "C+[1,4,2,5] C+[3,6,4,1] C+[5,2,6,3]";
pub const HOPF: &str = "C-[4,1,3,2] C-[2,3,1,4]";
pub const VIRTUAL_TREFOIL: &str = "C-[2,4,3,1] C-[3,1,4,2]";
pub const TORUS: &str = "M[1,2,3,4] M[3,4,1,2]";
pub const WHITEHEAD_LIKE: &str = "C-[6,1,7,2] C-[8,3,5,4] C-[2,5,3,6] C-[4,7,1,8]";
pub const MIXED: &str = "C+[1,4,2,5] C+[3,6,4,1] C+[5,2,6,3] V[7,8,8,7] O[9]";

pub fn diagram(s: &str) -> Diagram {
    parse_diagram(s).expect("fixture parses")
}

pub fn all_fixtures() -> Vec<Diagram> {
    [FIGURE_EIGHT, TREFOIL, HOPF, VIRTUAL_TREFOIL, TORUS, WHITEHEAD_LIKE, MIXED].iter().map(|s| diagram(s)).collect()
}

pub fn bq(under: [[u32; 3]; 3], over: [[u32; 3]; 3]) -> Biquandle {
    let u: Vec<Vec<u32>> = under.iter().map(|r| r.to_vec()).collect();
    let o: Vec<Vec<u32>> = over.iter().map(|r| r.to_vec()).collect();
    Biquandle::from_rows(&u, &o).expect("fixture is a biquandle")
}

pub fn hs() -> Biquandle {
    bq([[2, 3, 1], [3, 1, 2], [1, 2, 3]], [[2, 2, 2], [1, 1, 1], [3, 3, 3]])
}

pub fn constant_action() -> Biquandle {
    bq([[2, 2, 2], [1, 1, 1], [3, 3, 3]], [[2, 3, 1], [3, 1, 2], [1, 2, 3]])
}

pub fn surface_bq() -> Biquandle {
    bq([[3, 1, 3], [2, 2, 2], [1, 3, 1]], [[3, 3, 3], [2, 2, 2], [1, 1, 1]])
}

fn rows(t: [[u32; 3]; 3]) -> Vec<Vec<u32>> {
    t.iter().map(|r| r.to_vec()).collect()
}

pub fn hs_module() -> BiquandleModule {
    BiquandleModule::new(
        hs(),
        Zm::new(3).unwrap(),
        &rows([[2, 1, 1], [2, 2, 1], [1, 2, 1]]),
        &rows([[2, 2, 1], [1, 2, 2], [1, 1, 1]]),
        &rows([[1, 1, 2], [1, 1, 2], [1, 1, 2]]),
    )
    .unwrap()
}

pub fn ex1_module() -> BiquandleModule {
    BiquandleModule::new(
        constant_action(),
        Zm::new(3).unwrap(),
        &rows([[1, 1, 1], [1, 1, 1], [1, 1, 1]]),
        &rows([[1, 1, 2], [1, 1, 2], [2, 2, 1]]),
        &rows([[2, 1, 1], [1, 2, 1], [2, 2, 2]]),
    )
    .unwrap()
}

pub fn virtual_module() -> BiquandleModule {
    BiquandleModule::new(
        constant_action(),
        Zm::new(5).unwrap(),
        &rows([[1, 1, 1], [1, 1, 1], [4, 4, 4]]),
        &rows([[1, 4, 1], [4, 1, 4], [4, 1, 4]]),
        &rows([[2, 2, 3], [3, 2, 2], [3, 3, 3]]),
    )
    .unwrap()
}

pub fn surface_module() -> BiquandleModule {
    BiquandleModule::new(
        surface_bq(),
        Zm::new(3).unwrap(),
        &rows([[1, 1, 1], [2, 1, 2], [1, 1, 1]]),
        &rows([[1, 0, 2], [0, 1, 0], [2, 0, 1]]),
        &rows([[2, 2, 2], [2, 2, 2], [2, 2, 2]]),
    )
    .unwrap()
}

pub fn maps(images: &[[u32; 3]]) -> Vec<BiquandleMap> {
    images.iter().map(|m| BiquandleMap::from_one_based(m)).collect()
}

pub fn ex1_endos() -> Vec<BiquandleMap> {
    maps(&[[1, 2, 3], [2, 1, 3], [3, 3, 3]])
}

/// Every 2-element biquandle, found by scanning all table pairs.
pub fn order_two_biquandles() -> Vec<Biquandle> {
    let mut out = Vec::new();
    for code in 0u32..256 {
        let bit = |k: u32| (code >> k & 1) + 1;
        let under = vec![vec![bit(0), bit(1)], vec![bit(2), bit(3)]];
        let over = vec![vec![bit(4), bit(5)], vec![bit(6), bit(7)]];
        if let Ok(b) = Biquandle::from_rows(&under, &over) {
            out.push(b);
        }
    }
    out
}
