#include "fss/weights.hpp"

#include "fss/config.hpp"
#include "fss/errors.hpp"

namespace fss {

void WeightTable::validate() const {
    for (double v : {intramural_first_last, intramural_rest, extramural_first_last, extramural_second_penultimate,
                     extramural_rest})
        if (v < 0) throw InvalidParameterError("weight table entries must be >= 0");
    if (intramural_first_last <= 0 || extramural_first_last <= 0)
        throw InvalidParameterError("first/last weights must be > 0");
}

WeightTable WeightTable::from_toml(const std::filesystem::path& path) {
    TomlFile toml = TomlFile::parse_file(path);
    WeightTable t;
    t.intramural_first_last = toml.get_double_or("intramural_first_last", t.intramural_first_last);
    t.intramural_rest = toml.get_double_or("intramural_rest", t.intramural_rest);
    t.extramural_first_last = toml.get_double_or("extramural_first_last", t.extramural_first_last);
    t.extramural_second_penultimate =
        toml.get_double_or("extramural_second_penultimate", t.extramural_second_penultimate);
    t.extramural_rest = toml.get_double_or("extramural_rest", t.extramural_rest);
    t.validate();
    return t;
}

std::vector<double> positional_weights(std::size_t n, bool intramural, WeightingScheme scheme,
                                       const WeightTable& table) {
    if (n == 0) throw EmptyBylineError();

    if (scheme == WeightingScheme::Alphabetical) return std::vector<double>(n, 1.0 / static_cast<double>(n));

    if (n == 1) return {1.0};

    std::vector<double> raw(n, 0.0);
    if (n == 2) {
        double fl = intramural ? table.intramural_first_last : table.extramural_first_last;
        raw = {fl, fl};
    } else if (intramural) {
        double mid = table.intramural_rest / static_cast<double>(n - 2);
        raw.assign(n, mid);
        raw.front() = raw.back() = table.intramural_first_last;
    } else if (n == 3) {
        double interior = table.extramural_second_penultimate + table.extramural_rest / 2.0;
        raw = {table.extramural_first_last, interior, table.extramural_first_last};
    } else if (n == 4) {
        raw = {table.extramural_first_last, table.extramural_second_penultimate,
               table.extramural_second_penultimate, table.extramural_first_last};
    } else {
        double mid = table.extramural_rest / static_cast<double>(n - 4);
        raw.assign(n, mid);
        raw.front() = raw.back() = table.extramural_first_last;
        raw[1] = raw[n - 2] = table.extramural_second_penultimate;
    }

    double sum = 0;
    for (double v : raw) sum += v;
    for (double& v : raw) v /= sum;
    return raw;
}

bool intramural_byline(const Publication& pub) {
    if (pub.byline.empty()) throw EmptyBylineError();
    return pub.byline.front().affiliation_id == pub.byline.back().affiliation_id;
}

WeightVector fractional_weights(const Publication& pub, WeightingScheme scheme, const WeightTable& table) {
    WeightVector out;
    out.pub_id = pub.pub_id;
    out.weights = positional_weights(pub.byline.size(), intramural_byline(pub), scheme, table);
    return out;
}

}  // namespace fss
