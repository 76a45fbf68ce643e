#include "frtok/vocab.hpp"

#include <fstream>

#include "frtok/errors.hpp"

namespace frtok {

std::vector<std::string> Vocabulary::special_tokens() {
    return {kPad, kUnk, kCls, kSep, kMask, kNewline, kTab};
}

Vocabulary::Vocabulary(std::vector<std::string> tokens,
                       std::size_t reserved_count)
    : tokens_(std::move(tokens)), reserved_count_(reserved_count) {
    index_.reserve(tokens_.size() * 2);
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        auto [it, inserted] =
            index_.emplace(tokens_[i], static_cast<TokenId>(i));
        if (!inserted) {
            throw Error(ErrorCode::FormatViolation,
                        "duplicate token in vocabulary: " + tokens_[i]);
        }
    }
    index_specials();
}

void Vocabulary::index_specials() {
    auto find = [&](const char* t) -> TokenId {
        auto it = index_.find(std::string_view(t));
        return it == index_.end() ? -1 : it->second;
    };
    pad_ = find(kPad);
    unk_ = find(kUnk);
    cls_ = find(kCls);
    sep_ = find(kSep);
    mask_ = find(kMask);
    newline_ = find(kNewline);
    tab_ = find(kTab);
    if (unk_ < 0) {
        throw Error(ErrorCode::FormatViolation,
                    "vocabulary is missing the [UNK] token");
    }
}

std::optional<TokenId> Vocabulary::id_of(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const std::string& Vocabulary::token(TokenId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
        throw Error(ErrorCode::UnknownId,
                    "unknown token id " + std::to_string(id));
    }
    return tokens_[static_cast<std::size_t>(id)];
}

bool Vocabulary::is_special(TokenId id) const {
    return id == pad_ || id == unk_ || id == cls_ || id == sep_ ||
           id == mask_ || id == newline_ || id == tab_;
}

bool Vocabulary::is_continuation(TokenId id) const {
    const std::string& t = token(id);
    return t.size() > 2 && t.compare(0, 2, kContinuation) == 0;
}

std::uint64_t Vocabulary::content_hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](unsigned char byte) {
        h ^= byte;
        h *= 0x100000001b3ULL;
    };
    for (const std::string& t : tokens_) {
        for (char c : t) {
            mix(static_cast<unsigned char>(c));
        }
        mix('\n');
    }
    return h;
}

void Vocabulary::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot open " + path.string() +
                                       " for writing");
    }
    for (const std::string& t : tokens_) {
        out << t << '\n';
    }
    if (!out) {
        throw Error(ErrorCode::Io, "write failed: " + path.string());
    }
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    std::vector<std::string> tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            throw Error(ErrorCode::FormatViolation,
                        "empty vocab entry at line " + std::to_string(line_no));
        }
        tokens.push_back(line);
    }
    std::size_t reserved = 0;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        if (it->starts_with("[RES_") && it->ends_with("]")) {
            ++reserved;
        } else {
            break;
        }
    }
    return Vocabulary(std::move(tokens), reserved);
}

}  // namespace frtok
