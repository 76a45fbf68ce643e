#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace frtok {

using Json = nlohmann::ordered_json;

enum class Source { CulturaX, Wikipedia, HAL, Other };

Source parse_source(std::string_view name);
const char* to_string(Source source);

struct QualityScores {
    double stopword_ratio = 0.0;
    double repetition_ratio = 0.0;
};

struct Document {
    std::string id;
    Source source = Source::Other;
    std::string text;
    std::optional<std::uint64_t> token_count;
    std::optional<QualityScores> quality;
    Json extra;  // unknown input fields, passed through verbatim

    std::uint64_t content_hash() const;

    static Document from_json(const Json& j);
    Json to_json() const;
};

// FNV-1a over the raw text bytes.
std::uint64_t fnv1a(std::string_view bytes);

class DocumentStream {
  public:
    virtual ~DocumentStream() = default;
    virtual bool next(Document& doc) = 0;
};

class VectorDocumentStream : public DocumentStream {
  public:
    explicit VectorDocumentStream(std::vector<Document> docs)
        : docs_(std::move(docs)) {}
    bool next(Document& doc) override {
        if (pos_ >= docs_.size()) {
            return false;
        }
        doc = docs_[pos_++];
        return true;
    }

  private:
    std::vector<Document> docs_;
    std::size_t pos_ = 0;
};

// One JSON document per line: {"id": ..., "source": ..., "text": ...}.
// Raises FormatViolation with the line number on bad records.
class JsonlReader : public DocumentStream {
  public:
    explicit JsonlReader(std::istream& in) : in_(&in) {}
    bool next(Document& doc) override;
    std::size_t line_number() const { return line_; }

  private:
    std::istream* in_;
    std::size_t line_ = 0;
};

// Reads a sequence of .jsonl files as one stream.
class JsonlFileStream : public DocumentStream {
  public:
    explicit JsonlFileStream(std::vector<std::filesystem::path> paths);
    ~JsonlFileStream() override;
    bool next(Document& doc) override;

  private:
    bool open_next();

    std::vector<std::filesystem::path> paths_;
    std::size_t file_index_ = 0;
    std::unique_ptr<std::ifstream> file_;
    std::unique_ptr<JsonlReader> reader_;
};

void write_jsonl(std::ostream& out, const Document& doc);

// French stopword list: bundled default, overridable from a file with one
// form per line ('#' comments allowed).
class StopwordList {
  public:
    static const StopwordList& french();
    static StopwordList from_file(const std::filesystem::path& path);
    explicit StopwordList(std::vector<std::string> words);

    bool contains(std::string_view lowercased_word) const;
    std::size_t size() const { return words_.size(); }

  private:
    struct StringHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view s) const {
            return std::hash<std::string_view>{}(s);
        }
    };
    std::vector<std::string> words_;
    std::unordered_map<std::string, bool, StringHash, std::equal_to<>> set_;
};

// stopword tokens / whitespace tokens. Tokens are lowercased and stripped of
// leading/trailing punctuation before lookup; empty text scores 0.
double stopword_ratio(std::string_view text, const StopwordList& stopwords);

// 1 - distinct word trigrams / total word trigrams over lowercased
// whitespace tokens; texts with fewer than three words score 0.
double repetition_ratio(std::string_view text);

}  // namespace frtok
