"""
Result persistence for the Spectral Turan Workbench
Handles the line-delimited record file, the run manifest and resume-by-skip
of completed extremal cells
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from config import settings
from errors import WorkbenchError
from schemas.records import ExtremalRecord, RunManifest
from services.report_service import report_service

logger = logging.getLogger(__name__)

RECORDS_FILE = "records.jsonl"
MANIFEST_FILE = "manifest.json"


class ResultStore:
    """Manages the records file and manifest of one output directory"""

    def __init__(self, directory: Optional[Path] = None):
        self._directory = Path(directory) if directory is not None else None
        self._manifest: Optional[RunManifest] = None

    @property
    def directory(self) -> Path:
        """Output directory, defaulting to the configured results path"""
        if self._directory is None:
            return settings.results_path()
        return self._directory

    @property
    def records_path(self) -> Path:
        return self.directory / RECORDS_FILE

    @property
    def manifest_path(self) -> Path:
        return self.directory / MANIFEST_FILE

    @property
    def manifest(self) -> RunManifest:
        if self._manifest is None:
            raise WorkbenchError("result store is not open")
        return self._manifest

    def open(self, parameters: Dict[str, Any], resume: bool = False) -> RunManifest:
        """
        Prepare the directory; with resume an existing manifest is kept and
        its completed cells are skipped, otherwise previous records are cleared
        """
        self.directory.mkdir(parents=True, exist_ok=True)
        tolerances = {
            "eigen": settings.EIGEN_TOLERANCE,
            "compare": settings.COMPARE_TOLERANCE,
            "witness": settings.WITNESS_TOLERANCE,
        }

        if resume and self.manifest_path.exists():
            self._manifest = RunManifest.model_validate_json(self.manifest_path.read_text())
            if self._manifest.tolerances != tolerances:
                logger.warning(f"resuming with tolerances {tolerances}, manifest has {self._manifest.tolerances}")
            self._manifest.parameters.update(parameters)
            logger.info(f"resuming run in {self.directory}: {len(self._manifest.completed)} cells done")
        else:
            self._manifest = RunManifest(
                app_version=settings.APP_VERSION,
                parameters=parameters,
                tolerances=tolerances,
            )
            self.records_path.write_text("")
            logger.info(f"starting run in {self.directory}")

        self.save_manifest()
        return self._manifest

    def is_completed(self, key: str) -> bool:
        return key in self.manifest.completed

    def append(self, record: ExtremalRecord) -> None:
        """Write one record and mark its cell completed"""
        key = record.key()
        with self.records_path.open("a") as stream:
            stream.write(report_service.to_json_line(record) + "\n")
        self.manifest.completed.append(key)
        self.manifest.census[key] = record.census
        self.save_manifest()
        logger.debug(f"stored cell {key}")

    def load_records(self) -> List[ExtremalRecord]:
        if not self.records_path.exists():
            return []
        return [
            report_service.from_json_line(ExtremalRecord, line)
            for line in self.records_path.read_text().splitlines()
            if line.strip()
        ]

    def save_manifest(self) -> None:
        self.manifest_path.write_text(report_service.to_json_line(self.manifest) + "\n")



# Global store for the configured results directory
result_store = ResultStore()
