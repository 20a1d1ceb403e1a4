#include "tcarank/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tcarank {

namespace {

std::string trim(std::string_view s) {
    const char* ws = " \t\r";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return "";
    const auto end = s.find_last_not_of(ws);
    return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(trim(s.substr(start)));
            return parts;
        }
        parts.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
}

// Non-empty lines with their 1-based numbers.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find('\n', start);
        const auto end = pos == std::string_view::npos ? text.size() : pos;
        ++number;
        std::string line = trim(text.substr(start, end - start));
        if (!line.empty()) lines.emplace_back(number, std::move(line));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return lines;
}

double parse_positive_weight(const std::string& token, int line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(line, "invalid weight '" + token + "'");
    if (!(value > 0.0) || !std::isfinite(value))
        throw ParseError(line, "weight must be positive");
    return value;
}

double parse_number(const std::string& token, int line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ParseError(line, "non-numeric cell '" + token + "'");
    return value;
}

// "A>B>[C,D]" -> tiers of label strings.
std::vector<std::vector<std::string>> parse_ordering_token(const std::string& token, int line) {
    std::vector<std::vector<std::string>> tiers;
    for (const std::string& part : split(token, '>')) {
        if (part.empty())
            throw ParseError(line, "empty tier in ordering '" + token + "'");
        std::vector<std::string> tier;
        if (part.front() == '[') {
            if (part.back() != ']')
                throw ParseError(line, "unterminated tie group in '" + token + "'");
            for (const std::string& name : split(part.substr(1, part.size() - 2), ','))
                tier.push_back(name);
        } else {
            tier.push_back(part);
        }
        for (const std::string& name : tier)
            if (name.empty()) throw ParseError(line, "empty item name in '" + token + "'");
        tiers.push_back(std::move(tier));
    }
    return tiers;
}

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

} // namespace

RankDataset parse_orderings(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(0, "empty input");
    if (lines.front().second != "ordering,weight")
        throw ParseError(lines.front().first, "expected header 'ordering,weight'");
    if (lines.size() < 2)
        throw ParseError(lines.front().first, "no data rows");

    std::vector<std::vector<std::vector<std::string>>> rows;
    std::vector<double> weights;
    std::vector<int> line_numbers;
    std::vector<std::string> item_labels;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [line, content] = lines[r];
        const auto comma = content.rfind(',');
        if (comma == std::string::npos)
            throw ParseError(line, "expected 'ordering,weight'");
        auto tiers = parse_ordering_token(trim(content.substr(0, comma)), line);
        weights.push_back(parse_positive_weight(trim(content.substr(comma + 1)), line));
        if (r == 1)
            for (const auto& tier : tiers)
                for (const auto& name : tier) item_labels.push_back(name);
        rows.push_back(std::move(tiers));
        line_numbers.push_back(line);
    }

    ItemSet items = [&] {
        try {
            return ItemSet(item_labels);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_numbers.front(), e.what());
        }
    }();

    std::vector<Ordering> orderings;
    orderings.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Ordering ordering;
        ordering.weight = weights[r];
        std::vector<char> seen(items.size(), 0);
        for (const auto& tier : rows[r]) {
            std::vector<int> indices;
            for (const auto& name : tier) {
                const int j = items.index_of(name);
                if (j < 0)
                    throw ParseError(line_numbers[r], "unknown item '" + name + "'");
                if (seen[j])
                    throw ParseError(line_numbers[r], "duplicate item '" + name + "'");
                seen[j] = 1;
                indices.push_back(j);
            }
            ordering.tiers.push_back(std::move(indices));
        }
        if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }))
            throw ParseError(line_numbers[r], "ordering does not cover every item");
        orderings.push_back(std::move(ordering));
    }
    return RankDataset::from_orderings(std::move(items), orderings);
}

RankDataset parse_ranks(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(0, "empty input");
    std::vector<std::string> header = split(lines.front().second, ',');
    bool has_weight = !header.empty() && header.back() == "__weight";
    if (has_weight) header.pop_back();
    ItemSet items = [&] {
        try {
            return ItemSet(header);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines.front().first, e.what());
        }
    }();
    const int d = items.size();
    if (lines.size() < 2)
        throw ParseError(lines.front().first, "no data rows");

    std::vector<Ordering> orderings;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto& [line, content] = lines[r];
        const auto cells = split(content, ',');
        const std::size_t expected = static_cast<std::size_t>(d) + (has_weight ? 1 : 0);
        if (cells.size() != expected)
            throw ParseError(line, "expected " + std::to_string(expected) + " cells");
        std::vector<double> ranks(d);
        for (int j = 0; j < d; ++j) {
            ranks[j] = parse_number(cells[j], line);
            if (ranks[j] < 1.0 - 1e-9 || ranks[j] > d + 1e-9)
                throw ParseError(line, "rank out of range in '" + cells[j] + "'");
        }
        Ordering ordering;
        ordering.weight = has_weight ? parse_positive_weight(cells[d], line) : 1.0;
        // Ascending ranks, equal ranks tied.
        std::vector<int> order(d);
        for (int j = 0; j < d; ++j) order[j] = j;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return ranks[a] < ranks[b]; });
        for (int j : order) {
            if (!ordering.tiers.empty() &&
                std::abs(ranks[ordering.tiers.back().front()] - ranks[j]) <= 1e-9)
                ordering.tiers.back().push_back(j);
            else
                ordering.tiers.push_back({j});
        }
        orderings.push_back(std::move(ordering));
    }
    return RankDataset::from_orderings(std::move(items), orderings);
}

std::string serialize_orderings(const RankDataset& ds) {
    std::string out = "ordering,weight\n";
    for (const auto& pattern : ds.patterns()) {
        const Ordering ordering = ordering_from_scores(pattern.scores, pattern.weight);
        std::string token;
        for (std::size_t t = 0; t < ordering.tiers.size(); ++t) {
            if (t) token += '>';
            const auto& tier = ordering.tiers[t];
            if (tier.size() == 1) {
                token += ds.items().label(tier.front());
            } else {
                token += '[';
                for (std::size_t i = 0; i < tier.size(); ++i) {
                    if (i) token += ',';
                    token += ds.items().label(tier[i]);
                }
                token += ']';
            }
        }
        out += token + "," + format_double(pattern.weight) + "\n";
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw std::runtime_error("error while reading: " + path);
    return buffer.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write file: " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw std::runtime_error("error while writing: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

} // namespace tcarank
