from main.core.decision_desk import DecisionDesk
from main.factories.scenario_factory import load_regularity
from main.persisters.disk_persister import DiskPersister

from main.utils.performance import log_execution_duration


def create_decision_desk(regularity_path, persister=None):
    return log_execution_duration(
        lambda: __create_decision_desk(regularity_path, persister),
        identifier=f"Preparing decision desk for {regularity_path}"
    )


def __create_decision_desk(regularity_path, persister):
    return DecisionDesk(regularity=load_regularity(regularity_path, persister or DiskPersister()))
