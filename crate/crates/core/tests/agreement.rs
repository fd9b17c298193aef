use mmp_core::pattern::marked_distributions;
use mmp_core::recurrences::FamilyTable;
use mmp_core::series::FamilySeries;
use mmp_core::{AlternatingClass, AlternatingFamily, BarredFamily, EnumerationOptions, QuadrantPattern};

const MAX_LEN: usize = 11;

#[test]
fn oracle_recursion_and_series_agree() {
    let pattern: QuadrantPattern = "1,0,e,0".parse().unwrap();
    let table = FamilyTable::up_to_len(MAX_LEN);
    let series = FamilySeries::build(MAX_LEN).unwrap();
    let opts = EnumerationOptions::default();
    for len in 1..=MAX_LEN {
        for class in [AlternatingClass::UpDown, AlternatingClass::DownUp] {
            let brute = &marked_distributions(len, class, &[pattern], &opts).unwrap()[0];
            let fam = AlternatingFamily::of(class, len);
            assert_eq!(&brute.plain(), table.family(fam, len).unwrap(), "{fam} len {len}");
            assert_eq!(brute.plain(), series.family(fam).egf_coeff(len), "{fam} len {len}");
            if class == AlternatingClass::DownUp {
                let bar = if len % 2 == 1 { BarredFamily::DBar } else { BarredFamily::CBar };
                assert_eq!(&brute.barred(), table.barred(bar, len).unwrap(), "{bar} len {len}");
                assert_eq!(brute.barred(), series.barred(bar).egf_coeff(len), "{bar} len {len}");
            }
        }
    }
}
