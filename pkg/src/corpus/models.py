"""Corpus data types."""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationInfo,
    field_validator,
    model_validator,
)


@dataclass
class Vocabulary:
    """Bijective term <-> id map with ids assigned in first-occurrence order."""
    term_to_id: Dict[str, int] = field(default_factory=dict)
    id_to_term: List[str] = field(default_factory=list)
    frozen: bool = False

    @classmethod
    def from_terms(cls, terms: Iterable[str], frozen: bool = True) -> "Vocabulary":
        """Build a vocabulary from terms listed in id order."""
        vocabulary = cls()
        for term in terms:
            if term in vocabulary.term_to_id:
                raise ValueError(f"Duplicate vocabulary term: {term!r}")
            vocabulary.add(term)
        vocabulary.frozen = frozen
        return vocabulary

    @property
    def size(self) -> int:
        """V."""
        return len(self.id_to_term)

    def add(self, term: str) -> int:
        """Return the id of term, assigning the next id if it is new."""
        term_id = self.term_to_id.get(term)
        if term_id is not None:
            return term_id
        if self.frozen:
            raise KeyError(f"Vocabulary is frozen; unknown term {term!r}")
        term_id = len(self.id_to_term)
        self.term_to_id[term] = term_id
        self.id_to_term.append(term)
        return term_id

    def get(self, term: str) -> Optional[int]:
        return self.term_to_id.get(term)

    def freeze(self) -> "Vocabulary":
        self.frozen = True
        return self

    def __len__(self) -> int:
        return self.size

    def __contains__(self, term: object) -> bool:
        return term in self.term_to_id


@dataclass
class Document:
    """A document as sentences of vocabulary ids."""
    doc_id: str
    sentences: List[List[int]]
    labels: Optional[FrozenSet[str]] = None

    @property
    def num_tokens(self) -> int:
        return sum(len(sentence) for sentence in self.sentences)

    @property
    def num_sentences(self) -> int:
        return len(self.sentences)


@dataclass
class Corpus:
    """Id-encoded, sentence-structured document collection."""
    documents: List[Document]
    vocabulary: Vocabulary
    dropped_documents: int = 0
    dropped_sentences: int = 0
    skipped_tokens: int = 0

    @property
    def num_documents(self) -> int:
        """D."""
        return len(self.documents)

    @property
    def num_tokens(self) -> int:
        return sum(doc.num_tokens for doc in self.documents)

    @property
    def num_sentences(self) -> int:
        return sum(doc.num_sentences for doc in self.documents)

    def subset(self, indices: Iterable[int]) -> "Corpus":
        """Corpus over the given documents, sharing the vocabulary."""
        return Corpus(
            documents=[self.documents[i] for i in indices],
            vocabulary=self.vocabulary
        )


class PreprocessConfig(BaseModel):
    """Text preprocessing options."""
    model_config = ConfigDict(frozen=True)

    lowercase: bool = True
    stopwords: FrozenSet[str] = frozenset()
    min_term_length: int = Field(1, ge=1)
    pretokenized: bool = False

    @field_validator("stopwords")
    @classmethod
    def _fold_stopwords(cls, value: FrozenSet[str], info: ValidationInfo) -> FrozenSet[str]:
        # Stopwords are matched after lowercasing
        if info.data.get("lowercase", True):
            return frozenset(word.lower() for word in value)
        return value


class RawDocument(BaseModel):
    """One line of the input JSON Lines corpus."""
    id: str
    text: Optional[str] = None
    sentences: Optional[List[List[str]]] = None
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _exactly_one_body(self) -> "RawDocument":
        if (self.text is None) == (self.sentences is None):
            raise ValueError("document needs exactly one of 'text' or 'sentences'")
        return self

    @property
    def label_set(self) -> Optional[FrozenSet[str]]:
        return frozenset(self.labels) if self.labels is not None else None
