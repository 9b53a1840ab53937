#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fss/dataset.hpp"

namespace fss {

struct UdaSummaryRow {
    std::string uda_code;
    std::string uda_name;
    int sds_count = 0;          // SDSs of the UDA with at least one professor
    int university_count = 0;   // universities with >= 10 professors in the UDA
    std::int64_t staff = 0;     // professors in the UDA's SDSs
    std::int64_t publications = 0;  // publications with >= 1 byline professor of the UDA
};

struct RegionSummaryRow {
    std::string region_code;
    std::string region_name;
    int universities_10plus = 0;  // universities in the region with >= 10 professors overall
    std::int64_t professors = 0;
    int udas_10plus = 0;  // UDAs with >= 10 professors in the region
};

struct SummaryTotals {
    int sds_count = 0;
    int university_count = 0;
    std::int64_t staff = 0;
    // Distinct count; a publication co-authored across UDAs appears in every
    // UDA row but only once here.
    std::int64_t publications_distinct = 0;
};

struct DatasetSummary {
    std::vector<UdaSummaryRow> per_uda;
    std::vector<RegionSummaryRow> per_region;
    SummaryTotals totals;
};

DatasetSummary dataset_summary(const Dataset& ds);

}  // namespace fss
