#include "fss/summary.hpp"

#include <map>
#include <set>

namespace fss {

DatasetSummary dataset_summary(const Dataset& ds) {
    DatasetSummary out;

    std::map<std::string, std::string> uda_names;        // uda_code -> name
    std::map<std::string, std::string> sds_to_uda;       // sds_code -> uda_code
    for (const auto& f : ds.taxonomy()) {
        uda_names.emplace(f.uda_code, f.uda_name);
        sds_to_uda.emplace(f.sds_code, f.uda_code);
    }

    std::map<std::string, std::set<std::string>> uda_sds_with_staff;
    std::map<std::string, std::int64_t> uda_staff;
    std::map<std::pair<std::string, std::string>, std::int64_t> uda_univ_staff;  // (uda, university)
    std::map<std::string, std::int64_t> univ_staff;
    std::map<std::pair<std::string, std::string>, std::int64_t> region_uda_staff;
    std::map<std::string, std::int64_t> region_staff;
    std::map<std::string, std::string> region_names;

    for (const auto& r : ds.researchers()) {
        const std::string& uda = sds_to_uda.at(r.sds_code);
        uda_sds_with_staff[uda].insert(r.sds_code);
        ++uda_staff[uda];
        ++uda_univ_staff[{uda, r.university_id}];
        ++univ_staff[r.university_id];
        const Province& prov = ds.province_of(r);
        region_names.emplace(prov.region_code, prov.region_name);
        ++region_uda_staff[{prov.region_code, uda}];
        ++region_staff[prov.region_code];
    }

    // Publication counts: per UDA, and distinct overall.
    std::map<std::string, std::int64_t> uda_pubs;
    std::int64_t distinct_pubs = 0;
    for (const auto& p : ds.publications()) {
        std::set<std::string> udas_here;
        for (const auto& a : p.byline) {
            if (a.researcher_id.empty()) continue;
            const Researcher* res = ds.find_researcher(a.researcher_id);
            udas_here.insert(sds_to_uda.at(res->sds_code));
        }
        for (const auto& u : udas_here) ++uda_pubs[u];
        if (!udas_here.empty()) ++distinct_pubs;
    }

    for (const auto& [uda, name] : uda_names) {
        if (uda_staff.find(uda) == uda_staff.end()) continue;  // no professors in this UDA
        UdaSummaryRow row;
        row.uda_code = uda;
        row.uda_name = name;
        row.sds_count = static_cast<int>(uda_sds_with_staff[uda].size());
        for (const auto& [key, n] : uda_univ_staff)
            if (key.first == uda && n >= 10) ++row.university_count;
        row.staff = uda_staff[uda];
        row.publications = uda_pubs[uda];
        out.per_uda.push_back(std::move(row));
    }

    for (const auto& [region, name] : region_names) {
        RegionSummaryRow row;
        row.region_code = region;
        row.region_name = name;
        row.professors = region_staff[region];
        for (const auto& [key, n] : region_uda_staff)
            if (key.first == region && n >= 10) ++row.udas_10plus;
        out.per_region.push_back(std::move(row));
    }
    // Universities with >= 10 professors, attributed to their region.
    for (const auto& [univ, n] : univ_staff) {
        if (n < 10) continue;
        const University* u = ds.find_university(univ);
        const Province* p = ds.find_province(u->province_code);
        for (auto& row : out.per_region)
            if (row.region_code == p->region_code) ++row.universities_10plus;
    }

    std::set<std::string> sds_with_staff;
    for (const auto& [uda, set] : uda_sds_with_staff) sds_with_staff.insert(set.begin(), set.end());
    out.totals.sds_count = static_cast<int>(sds_with_staff.size());
    for (const auto& [univ, n] : univ_staff)
        if (n >= 10) ++out.totals.university_count;
    out.totals.staff = static_cast<std::int64_t>(ds.researchers().size());
    out.totals.publications_distinct = distinct_pubs;

    return out;
}

}  // namespace fss
