#include "frtok/corpus.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "frtok/errors.hpp"
#include "frtok/unicode.hpp"

namespace frtok {

namespace {

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        }
    }
    return out;
}

// Lowercases a UTF-8 word with the simple Latin case map.
std::string utf8_lower(std::string_view s) {
    bool ascii = true;
    for (char c : s) {
        if (static_cast<unsigned char>(c) >= 0x80) {
            ascii = false;
            break;
        }
    }
    if (ascii) {
        return ascii_lower(s);
    }
    std::string out;
    out.reserve(s.size());
    try {
        for (const DecodedChar& c : decode_utf8(s)) {
            append_utf8(out, simple_lowercase(c.cp));
        }
    } catch (const InvalidUtf8Error&) {
        return std::string(s);
    }
    return out;
}

bool is_space_byte(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
}

template <typename Fn>
void for_each_whitespace_token(std::string_view text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space_byte(text[i])) {
            ++i;
        }
        std::size_t begin = i;
        while (i < text.size() && !is_space_byte(text[i])) {
            ++i;
        }
        if (i > begin) {
            fn(text.substr(begin, i - begin));
        }
    }
}

std::string_view strip_edge_punct(std::string_view token) {
    auto is_edge = [](char c) {
        unsigned char u = static_cast<unsigned char>(c);
        return u < 0x80 && !(std::isalnum(u));
    };
    while (!token.empty() && is_edge(token.front())) {
        token.remove_prefix(1);
    }
    while (!token.empty() && is_edge(token.back())) {
        token.remove_suffix(1);
    }
    return token;
}

}  // namespace

Source parse_source(std::string_view name) {
    std::string lower = ascii_lower(name);
    if (lower == "culturax") {
        return Source::CulturaX;
    }
    if (lower == "wikipedia") {
        return Source::Wikipedia;
    }
    if (lower == "hal") {
        return Source::HAL;
    }
    return Source::Other;
}

const char* to_string(Source source) {
    switch (source) {
        case Source::CulturaX:
            return "culturax";
        case Source::Wikipedia:
            return "wikipedia";
        case Source::HAL:
            return "hal";
        case Source::Other:
            return "other";
    }
    return "other";
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t Document::content_hash() const { return fnv1a(text); }

Document Document::from_json(const Json& j) {
    if (!j.is_object()) {
        throw Error(ErrorCode::FormatViolation, "document is not an object");
    }
    Document doc;
    if (auto it = j.find("id"); it != j.end() && it->is_string()) {
        doc.id = it->get<std::string>();
    } else {
        throw Error(ErrorCode::FormatViolation, "document missing string id");
    }
    if (auto it = j.find("text"); it != j.end() && it->is_string()) {
        doc.text = it->get<std::string>();
    } else {
        throw Error(ErrorCode::FormatViolation, "document missing string text");
    }
    if (auto it = j.find("source"); it != j.end() && it->is_string()) {
        doc.source = parse_source(it->get<std::string>());
    }
    if (auto it = j.find("token_count");
        it != j.end() && it->is_number_unsigned()) {
        doc.token_count = it->get<std::uint64_t>();
    }
    if (auto it = j.find("quality"); it != j.end() && it->is_object()) {
        QualityScores q;
        q.stopword_ratio = it->value("stopword_ratio", 0.0);
        q.repetition_ratio = it->value("repetition_ratio", 0.0);
        doc.quality = q;
    }
    doc.extra = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() != "id" && it.key() != "source" && it.key() != "text" &&
            it.key() != "token_count" && it.key() != "quality") {
            doc.extra[it.key()] = it.value();
        }
    }
    return doc;
}

Json Document::to_json() const {
    Json j = Json::object();
    j["id"] = id;
    j["source"] = to_string(source);
    j["text"] = text;
    if (token_count) {
        j["token_count"] = *token_count;
    }
    if (quality) {
        j["quality"] = Json{{"stopword_ratio", quality->stopword_ratio},
                            {"repetition_ratio", quality->repetition_ratio}};
    }
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        j[it.key()] = it.value();
    }
    return j;
}

bool JsonlReader::next(Document& doc) {
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_;
        if (line.empty()) {
            continue;
        }
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw Error(ErrorCode::FormatViolation,
                        "invalid JSON at line " + std::to_string(line_));
        }
        try {
            doc = Document::from_json(j);
        } catch (const Error& e) {
            throw Error(ErrorCode::FormatViolation,
                        std::string(e.what()) + " at line " +
                            std::to_string(line_));
        }
        return true;
    }
    return false;
}

JsonlFileStream::JsonlFileStream(std::vector<std::filesystem::path> paths)
    : paths_(std::move(paths)) {}

JsonlFileStream::~JsonlFileStream() = default;

bool JsonlFileStream::open_next() {
    while (file_index_ < paths_.size()) {
        auto f = std::make_unique<std::ifstream>(paths_[file_index_]);
        if (!*f) {
            throw Error(ErrorCode::Io,
                        "cannot open " + paths_[file_index_].string());
        }
        ++file_index_;
        file_ = std::move(f);
        reader_ = std::make_unique<JsonlReader>(*file_);
        return true;
    }
    return false;
}

bool JsonlFileStream::next(Document& doc) {
    while (true) {
        if (!reader_) {
            if (!open_next()) {
                return false;
            }
        }
        if (reader_->next(doc)) {
            return true;
        }
        reader_.reset();
        file_.reset();
    }
}

void write_jsonl(std::ostream& out, const Document& doc) {
    out << doc.to_json().dump() << '\n';
}

namespace {
const char* kFrenchStopwords =
#include "french_stopwords.inc"
    ;
}  // namespace

StopwordList::StopwordList(std::vector<std::string> words)
    : words_(std::move(words)) {
    set_.reserve(words_.size() * 2);
    for (const std::string& w : words_) {
        set_.emplace(utf8_lower(w), true);
    }
}

const StopwordList& StopwordList::french() {
    static const StopwordList list = [] {
        std::vector<std::string> words;
        std::istringstream in(kFrenchStopwords);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] != '#') {
                words.push_back(line);
            }
        }
        return StopwordList(std::move(words));
    }();
    return list;
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line[0] != '#') {
            words.push_back(line);
        }
    }
    return StopwordList(std::move(words));
}

bool StopwordList::contains(std::string_view lowercased_word) const {
    return set_.find(lowercased_word) != set_.end();
}

double stopword_ratio(std::string_view text, const StopwordList& stopwords) {
    std::uint64_t total = 0;
    std::uint64_t hits = 0;
    for_each_whitespace_token(text, [&](std::string_view token) {
        ++total;
        std::string_view core = strip_edge_punct(token);
        if (!core.empty() && stopwords.contains(utf8_lower(core))) {
            ++hits;
        }
    });
    if (total == 0) {
        return 0.0;
    }
    return static_cast<double>(hits) / static_cast<double>(total);
}

double repetition_ratio(std::string_view text) {
    std::vector<std::string> words;
    for_each_whitespace_token(text, [&](std::string_view token) {
        words.push_back(utf8_lower(token));
    });
    if (words.size() < 3) {
        return 0.0;
    }
    std::unordered_set<std::string> distinct;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i + 2 < words.size(); ++i) {
        distinct.insert(words[i] + "\x1f" + words[i + 1] + "\x1f" +
                        words[i + 2]);
        ++total;
    }
    return 1.0 - static_cast<double>(distinct.size()) /
                     static_cast<double>(total);
}

}  // namespace frtok
