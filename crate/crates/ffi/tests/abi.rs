use std::ffi::{CStr, CString};
use std::ptr;

use geodetic_ffi::*;

fn graph6_of(g: *const GeodeticGraph) -> String {
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(geodetic_graph_to_graph6(g, &mut s), GeodeticStatus::Ok);
        let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
        geodetic_string_free(s);
        out
    }
}

#[test]
fn petersen_roundtrip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(geodetic_petersen(&mut g), GeodeticStatus::Ok);
        assert_eq!(geodetic_graph_order(g), 10);
        assert_eq!(geodetic_graph_edge_count(g), 15);
        assert!(geodetic_graph_is_geodetic(g));
        assert!(geodetic_graph_is_biconnected(g));
        let mut aut = 0u64;
        assert_eq!(
            geodetic_graph_automorphisms(g, &mut aut),
            GeodeticStatus::Ok
        );
        assert_eq!(aut, 120);
        let mut r = GeodeticReport::default();
        assert_eq!(geodetic_graph_report(g, &mut r), GeodeticStatus::Ok);
        assert_eq!(
            (r.radius, r.diameter, r.min_degree, r.max_degree),
            (2, 2, 3, 3)
        );
        assert!(r.is_regular && !r.is_hamiltonian);

        let text = CString::new(graph6_of(g)).unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(
            geodetic_graph_from_graph6(text.as_ptr(), &mut h),
            GeodeticStatus::Ok
        );
        let mut iso = false;
        assert_eq!(
            geodetic_graphs_isomorphic(g, h, &mut iso),
            GeodeticStatus::Ok
        );
        assert!(iso);

        let (mut cg, mut ch) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(geodetic_graph_canonical(g, &mut cg), GeodeticStatus::Ok);
        assert_eq!(geodetic_graph_canonical(h, &mut ch), GeodeticStatus::Ok);
        assert_eq!(graph6_of(cg), graph6_of(ch));
        for p in [g, h, cg, ch] {
            geodetic_graph_free(p);
        }
    }
}

#[test]
fn building_by_hand() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(geodetic_graph_new(4, &mut g), GeodeticStatus::Ok);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            assert_eq!(geodetic_graph_add_edge(g, u, v), GeodeticStatus::Ok);
        }
        assert!(!geodetic_graph_is_geodetic(g));
        let mut e = false;
        assert_eq!(geodetic_graph_has_edge(g, 0, 3, &mut e), GeodeticStatus::Ok);
        assert!(e);
        assert_eq!(
            geodetic_graph_has_edge(g, 0, 9, &mut e),
            GeodeticStatus::InvalidArgument
        );
        assert_eq!(
            geodetic_graph_add_edge(g, 2, 2),
            GeodeticStatus::InvalidArgument
        );
        geodetic_graph_free(g);
    }
}

#[test]
fn enumeration_set() {
    unsafe {
        let mut set = ptr::null_mut();
        assert_eq!(
            geodetic_enumerate(10, 2, false, &mut set),
            GeodeticStatus::Ok
        );
        assert_eq!(geodetic_set_len(set), 4);
        for i in 0..4 {
            let mut g = ptr::null_mut();
            assert_eq!(geodetic_set_get(set, i, &mut g), GeodeticStatus::Ok);
            assert!(geodetic_graph_is_geodetic(g) && geodetic_graph_is_biconnected(g));
            geodetic_graph_free(g);
        }
        let mut g = ptr::null_mut();
        assert_eq!(
            geodetic_set_get(set, 4, &mut g),
            GeodeticStatus::InvalidArgument
        );
        assert!(g.is_null());
        geodetic_set_free(set);

        assert_eq!(
            geodetic_enumerate(10, 1, true, &mut set),
            GeodeticStatus::Ok
        );
        assert_eq!(geodetic_set_len(set), 2);
        geodetic_set_free(set);
    }
}

#[test]
fn constructions() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(geodetic_f_graph(5, &mut g), GeodeticStatus::Ok);
        assert_eq!(geodetic_graph_order(g), 23);
        let side = [1usize, 2, 3, 6, 7, 8, 10];
        let mut f7 = ptr::null_mut();
        assert_eq!(
            geodetic_subdivide_cut(g, side.as_ptr(), side.len(), 1, &mut f7),
            GeodeticStatus::Ok
        );
        let mut want = ptr::null_mut();
        assert_eq!(geodetic_f_graph(7, &mut want), GeodeticStatus::Ok);
        let mut iso = false;
        assert_eq!(
            geodetic_graphs_isomorphic(f7, want, &mut iso),
            GeodeticStatus::Ok
        );
        assert!(iso);
        for p in [g, f7, want] {
            geodetic_graph_free(p);
        }

        let labels = [1usize, 1, 1, 1];
        assert_eq!(
            geodetic_subdivide_complete(labels.as_ptr(), 4, &mut g),
            GeodeticStatus::Ok
        );
        assert_eq!(geodetic_graph_order(g), 16);
        let mut u = ptr::null_mut();
        assert_eq!(
            geodetic_subdivide_uniform(g, 1, &mut u),
            GeodeticStatus::InvalidArgument
        );
        geodetic_graph_free(g);

        assert_eq!(
            geodetic_projective_plane_graph(3, &mut g),
            GeodeticStatus::CapacityExceeded
        );
        assert_eq!(
            geodetic_projective_plane_graph(4, &mut g),
            GeodeticStatus::InvalidArgument
        );
        assert_eq!(geodetic_cycle(2, &mut g), GeodeticStatus::InvalidArgument);
        assert_eq!(geodetic_big_h_graph(2, 2, 2, 0, &mut g), GeodeticStatus::Ok);
        assert_eq!(geodetic_graph_order(g), 24);
        geodetic_graph_free(g);
        assert_eq!(geodetic_h_graph(3, 2, 0, &mut g), GeodeticStatus::Ok);
        geodetic_graph_free(g);
        assert_eq!(geodetic_widespread_petersen(1, &mut g), GeodeticStatus::Ok);
        assert_eq!(geodetic_graph_order(g), 15);
        geodetic_graph_free(g);
        assert_eq!(geodetic_complete(5, &mut g), GeodeticStatus::Ok);
        geodetic_graph_free(g);
    }
}

#[test]
fn errors_and_messages() {
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("~~~").unwrap();
        assert_eq!(
            geodetic_graph_from_graph6(bad.as_ptr(), &mut g),
            GeodeticStatus::Parse
        );
        assert!(g.is_null());
        let msg = CStr::from_ptr(geodetic_last_error()).to_str().unwrap();
        assert!(msg.starts_with("graph6"), "{msg}");

        assert_eq!(
            geodetic_graph_from_graph6(ptr::null(), &mut g),
            GeodeticStatus::NullPointer
        );
        assert_eq!(
            geodetic_petersen(ptr::null_mut()),
            GeodeticStatus::NullPointer
        );
        assert_eq!(
            geodetic_graph_new(33, &mut g),
            GeodeticStatus::CapacityExceeded
        );
        assert_eq!(
            geodetic_enumerate(1, 1, false, &mut ptr::null_mut()),
            GeodeticStatus::InvalidArgument
        );
        assert!(!geodetic_graph_is_geodetic(ptr::null()));
        assert_eq!(geodetic_graph_order(ptr::null()), 0);
        geodetic_graph_free(ptr::null_mut());
        geodetic_set_free(ptr::null_mut());
        geodetic_string_free(ptr::null_mut());

        let mut c5 = ptr::null_mut();
        assert_eq!(geodetic_cycle(5, &mut c5), GeodeticStatus::Ok);
        let side = [0usize];
        assert_eq!(
            geodetic_subdivide_cut(c5, side.as_ptr(), 1, 1, &mut g),
            GeodeticStatus::InvalidCut
        );
        geodetic_graph_free(c5);

        let s = CStr::from_ptr(geodetic_status_message(GeodeticStatus::Overflow));
        assert_eq!(s.to_str().unwrap(), "result does not fit");
        assert_eq!(GEODETIC_MAX_VERTICES, geodetic::MAX_VERTICES);
    }
}

#[test]
fn automorphism_overflow() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(geodetic_complete(32, &mut g), GeodeticStatus::Ok);
        let mut aut = 0u64;
        assert_eq!(
            geodetic_graph_automorphisms(g, &mut aut),
            GeodeticStatus::Overflow
        );
        assert_eq!(aut, 0);
        geodetic_graph_free(g);
    }
}
