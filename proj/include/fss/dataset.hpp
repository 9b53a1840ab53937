#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fss/config.hpp"

namespace fss {

enum class WeightingScheme { Alphabetical, BylineWeighted };

struct FieldInfo {
    std::string sds_code;
    std::string sds_name;
    std::string uda_code;
    std::string uda_name;
    WeightingScheme scheme = WeightingScheme::Alphabetical;
    bool operator==(const FieldInfo&) const = default;
};

struct Province {
    std::string province_code;  // NUTS3
    std::string province_name;
    std::string region_code;  // NUTS2
    std::string region_name;
    std::string macro_area;
    bool operator==(const Province&) const = default;
};

struct University {
    std::string university_id;
    std::string province_code;
    bool operator==(const University&) const = default;
};

struct Researcher {
    std::string researcher_id;
    std::string sds_code;
    std::string university_id;
    int years_active = 0;
    bool operator==(const Researcher&) const = default;
};

struct Authorship {
    int position = 0;
    std::string researcher_id;  // empty for external authors
    std::string affiliation_id;
    bool operator==(const Authorship&) const = default;
};

struct Publication {
    std::string pub_id;
    int year = 0;
    std::int64_t citations = 0;
    std::vector<std::string> categories;  // sorted, de-duplicated
    std::vector<Authorship> byline;       // sorted by position, 1..n
    bool operator==(const Publication&) const = default;
};

// Raw rows as they appear in the six input files, before cross-validation.
struct PublicationRow {
    std::string pub_id;
    int year = 0;
    std::int64_t citations = 0;
    std::vector<std::string> categories;
};

struct AuthorshipRow {
    std::string pub_id;
    int position = 0;
    std::string researcher_id;
    std::string affiliation_id;
};

struct ResearcherRow {
    std::string researcher_id;
    std::string sds_code;
    std::string university_id;
    std::optional<int> years_active;  // empty column -> full window length
};

struct DatasetTables {
    std::vector<FieldInfo> taxonomy;
    std::vector<Province> territories;
    std::vector<University> universities;
    std::vector<ResearcherRow> researchers;
    std::vector<PublicationRow> publications;
    std::vector<AuthorshipRow> authorships;

    static DatasetTables read(const RunConfig& cfg);
};

// Immutable snapshot of the validated input universe. All tables are sorted
// by primary key so downstream results never depend on input row order.
class Dataset {
public:
    static Dataset load(const RunConfig& cfg);
    static Dataset from_tables(DatasetTables tables, Window window, std::string census_date);

    const std::vector<FieldInfo>& taxonomy() const { return taxonomy_; }
    const std::vector<Province>& territories() const { return territories_; }
    const std::vector<University>& universities() const { return universities_; }
    const std::vector<Researcher>& researchers() const { return researchers_; }
    const std::vector<Publication>& publications() const { return publications_; }
    const Window& window() const { return window_; }
    const std::string& census_date() const { return census_date_; }

    const FieldInfo* find_field(const std::string& sds_code) const;
    const Province* find_province(const std::string& province_code) const;
    const University* find_university(const std::string& university_id) const;
    const Researcher* find_researcher(const std::string& researcher_id) const;
    const Publication* find_publication(const std::string& pub_id) const;

    std::size_t researcher_index(const std::string& researcher_id) const;

    // (publication index, byline position) pairs of one researcher,
    // aligned with researchers() by index.
    const std::vector<std::pair<std::size_t, int>>& publications_of(std::size_t researcher_idx) const {
        return researcher_pubs_[researcher_idx];
    }

    // Region of the university a researcher is employed at.
    const Province& province_of(const Researcher& r) const;

    // Writes the six CSV files into dir (canonical order, full precision).
    void write(const std::filesystem::path& dir) const;

    bool operator==(const Dataset& other) const;

private:
    std::vector<FieldInfo> taxonomy_;
    std::vector<Province> territories_;
    std::vector<University> universities_;
    std::vector<Researcher> researchers_;
    std::vector<Publication> publications_;
    Window window_;
    std::string census_date_;

    std::unordered_map<std::string, std::size_t> field_idx_;
    std::unordered_map<std::string, std::size_t> province_idx_;
    std::unordered_map<std::string, std::size_t> university_idx_;
    std::unordered_map<std::string, std::size_t> researcher_idx_;
    std::unordered_map<std::string, std::size_t> publication_idx_;
    std::vector<std::vector<std::pair<std::size_t, int>>> researcher_pubs_;
};

// Runs every cross-table check and reports each violation instead of
// stopping at the first. Used by `fss validate`; Dataset::from_tables throws
// on the first violation via the same checks.
std::vector<std::string> check_tables(const DatasetTables& tables, const Window& window);

WeightingScheme parse_weighting_scheme(std::string_view text);  // "alphabetical" | "byline"
std::string_view weighting_scheme_name(WeightingScheme s);

}  // namespace fss
