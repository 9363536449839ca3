#include "vinco/reference.hpp"

#include "vinco/closed_forms.hpp"
#include "vinco/recurrences.hpp"
#include "vinco/series.hpp"

namespace vinco {

namespace {

PatternPair rep(const char* text) { return parse_pair(text); }

std::vector<Int> family_values(ClosedFormFamily f, int n_max) {
    std::vector<Int> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(closed_form(f, n));
    return out;
}

std::vector<Int> series_values(const TruncatedSeries& s, int n_max) {
    std::vector<Int> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(s.coeff(n));
    return out;
}

}  // namespace

std::vector<ReferenceSequence> reference_sequences(int n_max) {
    std::vector<ReferenceSequence> refs;
    refs.push_back({"catalan", "A000108", rep("123 | 123;y=1"),
                    family_values(ClosedFormFamily::Catalan, n_max)});
    refs.push_back({"central_polygonal", "A000124", rep("123 | 231;y=1"),
                    family_values(ClosedFormFamily::CentralPolygonal, n_max)});
    refs.push_back({"power2", "A000079", rep("123;x=2 | 312;y=2"),
                    family_values(ClosedFormFamily::PowerOfTwo, n_max)});
    refs.push_back({"A121690", "A121690", rep("123;x=2 | 132;y=2"),
                    family_values(ClosedFormFamily::A121690, n_max)});
    refs.push_back({"A098569", "A098569", rep("123;x=2 | 123;y=2"),
                    family_values(ClosedFormFamily::A098569, n_max)});
    refs.push_back({"motzkin", "A001006", rep("132 | 123;y=2"),
                    family_values(ClosedFormFamily::Motzkin, n_max)});
    refs.push_back({"lattice_area_ogf", "A249560/A249563 (sources disagree)",
                    rep("231;x=1 | 132;y=2"), series_values(ogf_lattice(n_max), n_max)});
    refs.push_back({"distinct_partition_ogf", "A249561", rep("123;x=1 | 231;y=2"),
                    series_values(ogf_partition(n_max), n_max)});
    refs.push_back({"block_recurrence", "A249563/A249560 (sources disagree)",
                    rep("132;x=2 | 123;y=1"), recurrence_blocks(n_max).sequence});
    refs.push_back({"ceiling_recurrence", "A249562", rep("123;x=2 | 123;y=1"),
                    recurrence_ceiling(n_max).sequence});
    return refs;
}

std::optional<std::string> match_reference(const std::vector<ReferenceSequence>& refs,
                                           const std::vector<std::uint64_t>& prefix) {
    for (const auto& r : refs) {
        if (r.values.size() < prefix.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < prefix.size() && ok; ++i)
            ok = (r.values[i] == Int(prefix[i]));
        if (ok) return r.name;
    }
    return std::nullopt;
}

}  // namespace vinco
