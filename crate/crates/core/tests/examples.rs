macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                run_example().unwrap();
            }
        }
    };
}

example!(spectra, "spectra.rs");
example!(closed_form, "closed_form.rs");
example!(oracle_agreement, "oracle_agreement.rs");
example!(quadrature_decomposition, "quadrature_decomposition.rs");
example!(hilbert_envelope, "hilbert_envelope.rs");
example!(verification_report, "verification_report.rs");

mod export_waveforms {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/export_waveforms.rs"
    ));

    #[test]
    fn writes_every_series() {
        let dir = std::env::temp_dir().join(format!("meyer-examples-{}", std::process::id()));
        let written = export_all(&dir).unwrap();
        assert_eq!(written.len(), 7);
        for path in written {
            assert!(
                std::fs::metadata(&path).unwrap().len() > 0,
                "{}",
                path.display()
            );
        }
    }
}
