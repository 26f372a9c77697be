import os
from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')

app = Celery('kodaira_kit')
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()

# Census tasks are short and CPU bound.
app.conf.worker_prefetch_multiplier = 1
