#include "fss/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "fss/csv.hpp"
#include "fss/errors.hpp"
#include "fss/util.hpp"

namespace fss {

WeightingScheme parse_weighting_scheme(std::string_view text) {
    if (text == "alphabetical") return WeightingScheme::Alphabetical;
    if (text == "byline") return WeightingScheme::BylineWeighted;
    throw Error("unknown weighting_scheme '" + std::string(text) + "' (expected alphabetical|byline)");
}

std::string_view weighting_scheme_name(WeightingScheme s) {
    return s == WeightingScheme::Alphabetical ? "alphabetical" : "byline";
}

namespace {

constexpr std::string_view kTaxonomyHeader[] = {"sds_code", "sds_name", "uda_code", "uda_name", "weighting_scheme"};
constexpr std::string_view kTerritoriesHeader[] = {"province_code", "province_name", "region_code", "region_name",
                                                   "macro_area"};
constexpr std::string_view kUniversitiesHeader[] = {"university_id", "province_code"};
constexpr std::string_view kProfessorsHeader[] = {"researcher_id", "sds_code", "university_id", "years_active"};
constexpr std::string_view kPublicationsHeader[] = {"pub_id", "year", "citations", "categories"};
constexpr std::string_view kAuthorshipsHeader[] = {"pub_id", "position", "researcher_id", "affiliation_id"};

int parse_int_field(const std::string& file, std::size_t line, const std::string& value, const char* what) {
    long long out = 0;
    if (!parse_int(value, out) || out < std::numeric_limits<int>::min() || out > std::numeric_limits<int>::max())
        throw SchemaError(file, line, std::string(what) + " is not an integer: '" + value + "'");
    return static_cast<int>(out);
}

std::vector<std::string> split_categories(const std::string& value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t bar = value.find('|', start);
        std::string item = value.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        if (!item.empty()) out.push_back(std::move(item));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

}  // namespace

DatasetTables DatasetTables::read(const RunConfig& cfg) {
    DatasetTables t;

    {
        auto rows = csv::load_table(cfg.file("taxonomy.csv"), kTaxonomyHeader);
        t.taxonomy.reserve(rows.size());
        for (const auto& r : rows) {
            FieldInfo f;
            f.sds_code = r.fields[0];
            f.sds_name = r.fields[1];
            f.uda_code = r.fields[2];
            f.uda_name = r.fields[3];
            try {
                f.scheme = parse_weighting_scheme(r.fields[4]);
            } catch (const Error& e) {
                throw SchemaError("taxonomy.csv", r.line, e.what());
            }
            t.taxonomy.push_back(std::move(f));
        }
    }
    {
        auto rows = csv::load_table(cfg.file("territories.csv"), kTerritoriesHeader);
        t.territories.reserve(rows.size());
        for (const auto& r : rows)
            t.territories.push_back({r.fields[0], r.fields[1], r.fields[2], r.fields[3], r.fields[4]});
    }
    {
        auto rows = csv::load_table(cfg.file("universities.csv"), kUniversitiesHeader);
        t.universities.reserve(rows.size());
        for (const auto& r : rows) t.universities.push_back({r.fields[0], r.fields[1]});
    }
    {
        auto rows = csv::load_table(cfg.file("professors.csv"), kProfessorsHeader);
        t.researchers.reserve(rows.size());
        for (const auto& r : rows) {
            ResearcherRow res;
            res.researcher_id = r.fields[0];
            res.sds_code = r.fields[1];
            res.university_id = r.fields[2];
            if (!r.fields[3].empty())
                res.years_active = parse_int_field("professors.csv", r.line, r.fields[3], "years_active");
            t.researchers.push_back(std::move(res));
        }
    }
    {
        auto rows = csv::load_table(cfg.file("publications.csv"), kPublicationsHeader);
        t.publications.reserve(rows.size());
        for (const auto& r : rows) {
            PublicationRow p;
            p.pub_id = r.fields[0];
            p.year = parse_int_field("publications.csv", r.line, r.fields[1], "year");
            p.citations = parse_int_field("publications.csv", r.line, r.fields[2], "citations");
            if (p.citations < 0) throw SchemaError("publications.csv", r.line, "citations must be >= 0");
            p.categories = split_categories(r.fields[3]);
            if (p.categories.empty()) throw SchemaError("publications.csv", r.line, "categories must be non-empty");
            t.publications.push_back(std::move(p));
        }
    }
    {
        auto rows = csv::load_table(cfg.file("authorships.csv"), kAuthorshipsHeader);
        t.authorships.reserve(rows.size());
        for (const auto& r : rows) {
            AuthorshipRow a;
            a.pub_id = r.fields[0];
            a.position = parse_int_field("authorships.csv", r.line, r.fields[1], "position");
            a.researcher_id = r.fields[2];
            a.affiliation_id = r.fields[3];
            t.authorships.push_back(std::move(a));
        }
    }
    return t;
}

namespace {

using ViolationSink = std::function<void(std::exception_ptr)>;

template <typename E>
void emit(const ViolationSink& sink, E error) {
    sink(std::make_exception_ptr(std::move(error)));
}

void visit_violations(const DatasetTables& t, const Window& window, const ViolationSink& sink) {
    std::set<std::string> sds_codes;
    std::map<std::string, std::string> uda_names;
    for (const auto& f : t.taxonomy) {
        if (!sds_codes.insert(f.sds_code).second) emit(sink, DuplicateKeyError("sds", f.sds_code));
        auto [it, inserted] = uda_names.emplace(f.uda_code, f.uda_name);
        if (!inserted && it->second != f.uda_name)
            emit(sink, SchemaError("taxonomy.csv", "uda '" + f.uda_code + "' has conflicting names '" + it->second +
                                                       "' and '" + f.uda_name + "'"));
    }

    std::set<std::string> province_codes;
    std::map<std::string, std::string> region_names;
    for (const auto& p : t.territories) {
        if (!province_codes.insert(p.province_code).second) emit(sink, DuplicateKeyError("province", p.province_code));
        auto [it, inserted] = region_names.emplace(p.region_code, p.region_name);
        if (!inserted && it->second != p.region_name)
            emit(sink, SchemaError("territories.csv", "region '" + p.region_code + "' has conflicting names '" +
                                                          it->second + "' and '" + p.region_name + "'"));
    }

    std::set<std::string> university_ids;
    for (const auto& u : t.universities) {
        if (!university_ids.insert(u.university_id).second) emit(sink, DuplicateKeyError("university", u.university_id));
        if (!province_codes.count(u.province_code))
            emit(sink, DanglingReferenceError("province", u.province_code, "universities.csv, university '" +
                                                                               u.university_id + "'"));
    }

    std::set<std::string> researcher_ids;
    for (const auto& r : t.researchers) {
        if (!researcher_ids.insert(r.researcher_id).second) emit(sink, DuplicateKeyError("researcher", r.researcher_id));
        if (!sds_codes.count(r.sds_code))
            emit(sink, DanglingReferenceError("sds", r.sds_code, "professors.csv, researcher '" + r.researcher_id + "'"));
        if (!university_ids.count(r.university_id))
            emit(sink, DanglingReferenceError("university", r.university_id,
                                              "professors.csv, researcher '" + r.researcher_id + "'"));
        int years = r.years_active.value_or(window.length());
        if (years < 1 || years > window.length())
            emit(sink, SchemaError("professors.csv", "researcher '" + r.researcher_id + "': years_active " +
                                                         std::to_string(years) + " outside 1.." +
                                                         std::to_string(window.length())));
    }

    std::set<std::string> pub_ids;
    for (const auto& p : t.publications) {
        if (!pub_ids.insert(p.pub_id).second) emit(sink, DuplicateKeyError("publication", p.pub_id));
        if (p.year < window.start || p.year > window.end)
            emit(sink, SchemaError("publications.csv", "publication '" + p.pub_id + "': year " +
                                                           std::to_string(p.year) + " outside window " +
                                                           std::to_string(window.start) + ".." +
                                                           std::to_string(window.end)));
        if (p.citations < 0)
            emit(sink, SchemaError("publications.csv", "publication '" + p.pub_id + "': citations must be >= 0"));
        if (p.categories.empty())
            emit(sink, SchemaError("publications.csv", "publication '" + p.pub_id + "': categories must be non-empty"));
    }

    std::set<std::pair<std::string, int>> seen_positions;
    std::set<std::pair<std::string, std::string>> seen_authors;
    std::map<std::string, std::vector<int>> positions_by_pub;
    for (const auto& a : t.authorships) {
        if (!pub_ids.count(a.pub_id))
            emit(sink, DanglingReferenceError("publication", a.pub_id, "authorships.csv"));
        if (!a.researcher_id.empty() && !researcher_ids.count(a.researcher_id))
            emit(sink, DanglingReferenceError("researcher", a.researcher_id,
                                              "authorships.csv, publication '" + a.pub_id + "'"));
        if (a.affiliation_id.empty())
            emit(sink, SchemaError("authorships.csv", "publication '" + a.pub_id + "' position " +
                                                          std::to_string(a.position) + ": affiliation_id is empty"));
        if (!seen_positions.insert({a.pub_id, a.position}).second)
            emit(sink, DuplicateKeyError("byline position", a.pub_id + ":" + std::to_string(a.position)));
        if (!a.researcher_id.empty() && !seen_authors.insert({a.pub_id, a.researcher_id}).second)
            emit(sink, DuplicateKeyError("byline entry", a.pub_id + ":" + a.researcher_id));
        positions_by_pub[a.pub_id].push_back(a.position);
    }

    for (const auto& p : t.publications) {
        auto it = positions_by_pub.find(p.pub_id);
        if (it == positions_by_pub.end()) {
            emit(sink, SchemaError("authorships.csv", "publication '" + p.pub_id + "' has no byline entries"));
            continue;
        }
        auto positions = it->second;
        std::sort(positions.begin(), positions.end());
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (positions[i] != static_cast<int>(i) + 1) {
                emit(sink, SchemaError("authorships.csv", "publication '" + p.pub_id +
                                                              "': byline positions are not contiguous 1..n"));
                break;
            }
        }
    }
}

}  // namespace

std::vector<std::string> check_tables(const DatasetTables& tables, const Window& window) {
    std::vector<std::string> out;
    visit_violations(tables, window, [&](std::exception_ptr p) {
        try {
            std::rethrow_exception(p);
        } catch (const std::exception& e) {
            out.emplace_back(e.what());
        }
    });
    return out;
}

Dataset Dataset::from_tables(DatasetTables tables, Window window, std::string census_date) {
    std::exception_ptr first;
    visit_violations(tables, window, [&](std::exception_ptr p) {
        if (!first) first = p;
    });
    if (first) std::rethrow_exception(first);

    Dataset ds;
    ds.window_ = window;
    ds.census_date_ = std::move(census_date);
    ds.taxonomy_ = std::move(tables.taxonomy);
    ds.territories_ = std::move(tables.territories);
    ds.universities_ = std::move(tables.universities);

    ds.researchers_.reserve(tables.researchers.size());
    for (const auto& r : tables.researchers)
        ds.researchers_.push_back(
            {r.researcher_id, r.sds_code, r.university_id, r.years_active.value_or(window.length())});

    ds.publications_.reserve(tables.publications.size());
    for (auto& p : tables.publications) {
        Publication pub;
        pub.pub_id = std::move(p.pub_id);
        pub.year = p.year;
        pub.citations = p.citations;
        pub.categories = std::move(p.categories);
        std::sort(pub.categories.begin(), pub.categories.end());
        pub.categories.erase(std::unique(pub.categories.begin(), pub.categories.end()), pub.categories.end());
        ds.publications_.push_back(std::move(pub));
    }

    auto by_key = [](auto& vec, auto key) {
        std::sort(vec.begin(), vec.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    };
    by_key(ds.taxonomy_, [](const FieldInfo& f) { return f.sds_code; });
    by_key(ds.territories_, [](const Province& p) { return p.province_code; });
    by_key(ds.universities_, [](const University& u) { return u.university_id; });
    by_key(ds.researchers_, [](const Researcher& r) { return r.researcher_id; });
    by_key(ds.publications_, [](const Publication& p) { return p.pub_id; });

    for (std::size_t i = 0; i < ds.taxonomy_.size(); ++i) ds.field_idx_[ds.taxonomy_[i].sds_code] = i;
    for (std::size_t i = 0; i < ds.territories_.size(); ++i) ds.province_idx_[ds.territories_[i].province_code] = i;
    for (std::size_t i = 0; i < ds.universities_.size(); ++i) ds.university_idx_[ds.universities_[i].university_id] = i;
    for (std::size_t i = 0; i < ds.researchers_.size(); ++i) ds.researcher_idx_[ds.researchers_[i].researcher_id] = i;
    for (std::size_t i = 0; i < ds.publications_.size(); ++i) ds.publication_idx_[ds.publications_[i].pub_id] = i;

    for (auto& a : tables.authorships) {
        Publication& pub = ds.publications_[ds.publication_idx_.at(a.pub_id)];
        pub.byline.push_back({a.position, std::move(a.researcher_id), std::move(a.affiliation_id)});
    }
    for (auto& pub : ds.publications_)
        std::sort(pub.byline.begin(), pub.byline.end(),
                  [](const Authorship& a, const Authorship& b) { return a.position < b.position; });

    ds.researcher_pubs_.resize(ds.researchers_.size());
    for (std::size_t pi = 0; pi < ds.publications_.size(); ++pi)
        for (const auto& entry : ds.publications_[pi].byline)
            if (!entry.researcher_id.empty())
                ds.researcher_pubs_[ds.researcher_idx_.at(entry.researcher_id)].push_back({pi, entry.position});

    return ds;
}

Dataset Dataset::load(const RunConfig& cfg) {
    return from_tables(DatasetTables::read(cfg), cfg.window, cfg.census_date);
}

const FieldInfo* Dataset::find_field(const std::string& sds_code) const {
    auto it = field_idx_.find(sds_code);
    return it == field_idx_.end() ? nullptr : &taxonomy_[it->second];
}

const Province* Dataset::find_province(const std::string& province_code) const {
    auto it = province_idx_.find(province_code);
    return it == province_idx_.end() ? nullptr : &territories_[it->second];
}

const University* Dataset::find_university(const std::string& university_id) const {
    auto it = university_idx_.find(university_id);
    return it == university_idx_.end() ? nullptr : &universities_[it->second];
}

const Researcher* Dataset::find_researcher(const std::string& researcher_id) const {
    auto it = researcher_idx_.find(researcher_id);
    return it == researcher_idx_.end() ? nullptr : &researchers_[it->second];
}

const Publication* Dataset::find_publication(const std::string& pub_id) const {
    auto it = publication_idx_.find(pub_id);
    return it == publication_idx_.end() ? nullptr : &publications_[it->second];
}

std::size_t Dataset::researcher_index(const std::string& researcher_id) const {
    auto it = researcher_idx_.find(researcher_id);
    if (it == researcher_idx_.end()) throw Error("unknown researcher: '" + researcher_id + "'");
    return it->second;
}

const Province& Dataset::province_of(const Researcher& r) const {
    const University* u = find_university(r.university_id);
    return *find_province(u->province_code);
}

void Dataset::write(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out) throw Error("cannot write " + (dir / name).string());
        return out;
    };

    {
        auto out = open("taxonomy.csv");
        out << "sds_code,sds_name,uda_code,uda_name,weighting_scheme\n";
        for (const auto& f : taxonomy_)
            csv::write_row(out, std::vector<std::string>{f.sds_code, f.sds_name, f.uda_code, f.uda_name,
                                                         std::string(weighting_scheme_name(f.scheme))});
    }
    {
        auto out = open("territories.csv");
        out << "province_code,province_name,region_code,region_name,macro_area\n";
        for (const auto& p : territories_)
            csv::write_row(out, std::vector<std::string>{p.province_code, p.province_name, p.region_code,
                                                         p.region_name, p.macro_area});
    }
    {
        auto out = open("universities.csv");
        out << "university_id,province_code\n";
        for (const auto& u : universities_)
            csv::write_row(out, std::vector<std::string>{u.university_id, u.province_code});
    }
    {
        auto out = open("professors.csv");
        out << "researcher_id,sds_code,university_id,years_active\n";
        for (const auto& r : researchers_)
            csv::write_row(out, std::vector<std::string>{r.researcher_id, r.sds_code, r.university_id,
                                                         std::to_string(r.years_active)});
    }
    {
        auto out = open("publications.csv");
        out << "pub_id,year,citations,categories\n";
        for (const auto& p : publications_) {
            std::string cats;
            for (std::size_t i = 0; i < p.categories.size(); ++i) {
                if (i) cats += '|';
                cats += p.categories[i];
            }
            csv::write_row(out, std::vector<std::string>{p.pub_id, std::to_string(p.year),
                                                         std::to_string(p.citations), cats});
        }
    }
    {
        auto out = open("authorships.csv");
        out << "pub_id,position,researcher_id,affiliation_id\n";
        for (const auto& p : publications_)
            for (const auto& a : p.byline)
                csv::write_row(out, std::vector<std::string>{p.pub_id, std::to_string(a.position), a.researcher_id,
                                                             a.affiliation_id});
    }
}

bool Dataset::operator==(const Dataset& other) const {
    return taxonomy_ == other.taxonomy_ && territories_ == other.territories_ &&
           universities_ == other.universities_ && researchers_ == other.researchers_ &&
           publications_ == other.publications_ && window_.start == other.window_.start &&
           window_.end == other.window_.end && census_date_ == other.census_date_;
}

}  // namespace fss
